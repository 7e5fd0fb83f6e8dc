"""Input coercion: JSON system documents and loose Python inputs to :class:`MwcSet`."""
from __future__ import annotations

from collections.abc import Mapping, Sequence

from .core import (
    MwcSet,
    ValidationError,
    VoterSet,
    WeightedGame,
    format_rational,
    validate_mwc_set,
)
from .games import derive_mwc

# keys an emitted analysis document may carry besides the system itself
_REPORT_KEYS = {"power"}


def _name_list(value, what: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise ValidationError(f"{what} must be a list of strings")
    return value


def parse_document(doc) -> MwcSet | WeightedGame:
    """Turn a decoded JSON system document into a system object.

    The document names its voters and gives either ``mwc`` (lists of voter
    names) or ``weights`` plus ``quota`` (integers or ``"p/q"`` strings).
    """
    if not isinstance(doc, Mapping):
        raise ValidationError("system document must be a JSON object")
    unknown = set(doc) - {"voters", "mwc", "weights", "quota"} - _REPORT_KEYS
    if unknown:
        raise ValidationError(f"unknown keys in system document: {sorted(unknown)}")
    if "voters" not in doc:
        raise ValidationError("system document needs 'voters'")
    voters = VoterSet(tuple(_name_list(doc["voters"], "voters")))
    has_mwc = "mwc" in doc
    has_weights = "weights" in doc or "quota" in doc
    if has_mwc == has_weights:
        raise ValidationError("give exactly one of 'mwc' or 'weights' + 'quota'")
    if has_mwc:
        mwc = doc["mwc"]
        if not isinstance(mwc, list):
            raise ValidationError("'mwc' must be a list of coalitions")
        coalitions = []
        for k, names in enumerate(mwc):
            names = _name_list(names, f"mwc[{k}]")
            if len(set(names)) != len(names):
                raise ValidationError(f"mwc[{k}] repeats a voter")
            coalitions.append(voters.coalition(names))
        return validate_mwc_set(voters, coalitions)
    if "weights" not in doc or "quota" not in doc:
        raise ValidationError("weighted form needs both 'weights' and 'quota'")
    if not isinstance(doc["weights"], list):
        raise ValidationError("'weights' must be a list")
    return WeightedGame(voters, tuple(doc["weights"]), doc["quota"])


def system_document(system: MwcSet | WeightedGame) -> dict:
    """Inverse of :func:`parse_document`."""
    doc: dict = {"voters": list(system.voters.names)}
    if isinstance(system, WeightedGame):
        doc["weights"] = [format_rational(w) for w in system.weights]
        doc["quota"] = format_rational(system.quota)
    else:
        doc["mwc"] = system.as_names()
    return doc


def check_system(system) -> MwcSet:
    """Coerce ``system`` to a validated :class:`MwcSet`.

    Accepts an :class:`MwcSet`, a :class:`WeightedGame` (MWCs are derived),
    a system document mapping, or a sequence of voter-index sequences
    (voters are then ``1..n`` with ``n`` one past the largest index).
    """
    if isinstance(system, MwcSet):
        return system
    if isinstance(system, WeightedGame):
        return derive_mwc(system)
    if isinstance(system, Mapping):
        return check_system(parse_document(system))
    if isinstance(system, Sequence) and not isinstance(system, str):
        groups = [list(c) for c in system]
        if not all(isinstance(i, int) and i >= 0 for c in groups for i in c):
            raise ValidationError("coalitions must be sequences of voter indices")
        n = max((i for c in groups for i in c), default=-1) + 1
        voters = VoterSet.of_size(max(n, 1))
        return validate_mwc_set(voters, [sum(1 << i for i in set(c)) for c in groups])
    raise ValidationError(f"cannot interpret {type(system).__name__} as a voting system")
