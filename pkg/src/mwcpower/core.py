"""Domain types shared by every other module.

Coalitions are plain ``int`` bitmasks: bit ``i`` set means voter ``i`` is a
member.  All index values are :class:`fractions.Fraction` (always reduced,
sign on the numerator) or ``int`` for Banzhaf scores.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

MAX_VOTERS = 64

Coalition = int


class PowerIndexError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(PowerIndexError, ValueError):
    """Input does not describe a valid voting system."""


class EmptyFamily(ValidationError):
    pass


class EmptyCoalitionMember(ValidationError):
    pass


class DuplicateMember(ValidationError):
    pass


class NotAntichain(ValidationError):
    def __init__(self, i: int, j: int):
        super().__init__(f"NotAntichain: members {i} and {j} are comparable")
        self.i = i
        self.j = j


class ZeroDenominator(ValidationError, ZeroDivisionError):
    pass


class ResourceLimitError(PowerIndexError):
    """A computation would exceed a configured size or voter cap."""


class SubfamilyBudgetExceeded(ResourceLimitError):
    pass


class TooManyVotersForDerivation(ResourceLimitError):
    pass


class TooManyVotersForOracle(ResourceLimitError):
    pass


class AtlasSizeExceeded(ResourceLimitError):
    pass


def rational_reduce(num: int, den: int) -> Fraction:
    """Return ``num/den`` in lowest terms; raise :class:`ZeroDenominator` for ``den == 0``."""
    if den == 0:
        raise ZeroDenominator(f"ZeroDenominator: {num}/0")
    return Fraction(num, den)


def parse_rational(value) -> Fraction:
    """Parse an ``int`` or a ``"p/q"`` / ``"p"`` string into an exact fraction.

    Floats are refused: they have already lost exactness.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise ValidationError(f"expected an integer or 'p/q' string, got {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num, _, den = text.partition("/")
            try:
                num, den = int(num), int(den)
            except ValueError:
                pass
            else:
                return rational_reduce(num, den)
        else:
            try:
                return Fraction(text)
            except ValueError:
                pass
        raise ValidationError(f"cannot parse rational {value!r}")
    raise ValidationError(f"expected an integer or 'p/q' string, got {value!r}")


def format_rational(value: Fraction | int) -> str:
    """Canonical ``"p/q"`` rendering; integers render as ``"p/1"``."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def members_of(coalition: Coalition) -> list[int]:
    """Voter indices in ``coalition``, ascending."""
    out = []
    while coalition:
        low = coalition & -coalition
        out.append(low.bit_length() - 1)
        coalition ^= low
    return out


def coalition_from_indices(indices: Iterable[int]) -> Coalition:
    bits = 0
    for i in indices:
        bits |= 1 << i
    return bits


@dataclass(frozen=True)
class VoterSet:
    """Ordered, named voters; identity is the index, names are for display."""

    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValidationError("a voting system needs at least one voter")
        if len(names) > MAX_VOTERS:
            raise ValidationError(
                f"TooManyVoters: {len(names)} voters given, at most {MAX_VOTERS} supported"
            )
        for name in names:
            if not isinstance(name, str) or not name:
                raise ValidationError(f"voter names must be non-empty strings, got {name!r}")
        if len(set(names)) != len(names):
            raise ValidationError("voter names must be pairwise distinct")

    @classmethod
    def of_size(cls, n: int) -> "VoterSet":
        """Voters labelled ``"1"`` .. ``"n"``."""
        return cls(tuple(str(i + 1) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def grand(self) -> Coalition:
        return (1 << self.n) - 1

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValidationError(f"unknown voter {name!r}") from None

    def coalition(self, names: Iterable[str]) -> Coalition:
        return coalition_from_indices(self.index(name) for name in names)

    def names_of(self, coalition: Coalition) -> list[str]:
        return [self.names[i] for i in members_of(coalition)]


@dataclass(frozen=True)
class MwcSet:
    """A voting system given by its minimal winning coalitions.

    Build through :func:`validate_mwc_set`; the constructor trusts its input.
    """

    voters: VoterSet
    members: tuple[Coalition, ...]

    @property
    def n(self) -> int:
        return self.voters.n

    @property
    def m(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def as_names(self) -> list[list[str]]:
        return [self.voters.names_of(v) for v in self.members]


@dataclass(frozen=True)
class WeightedGame:
    """Weights per voter and a quota; a coalition wins iff its weight meets the quota."""

    voters: VoterSet
    weights: tuple[Fraction, ...]
    quota: Fraction

    def __post_init__(self):
        weights = tuple(parse_rational(w) for w in self.weights)
        quota = parse_rational(self.quota)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "quota", quota)
        if len(weights) != self.voters.n:
            raise ValidationError(
                f"{len(weights)} weights given for {self.voters.n} voters"
            )
        if any(w < 0 for w in weights):
            raise ValidationError("weights must be nonnegative")
        if quota <= 0:
            raise ValidationError(f"quota must be positive, got {quota}")
        if quota > sum(weights):
            raise ValidationError(
                f"quota {quota} exceeds total weight {sum(weights)}; nobody could win"
            )

    def weight(self, coalition: Coalition) -> Fraction:
        return sum((self.weights[i] for i in members_of(coalition)), Fraction(0))

    def wins(self, coalition: Coalition) -> bool:
        return self.weight(coalition) >= self.quota


@dataclass(frozen=True)
class PowerReport:
    """Per-voter index values, in voter order."""

    voters: VoterSet
    bs: tuple[int, ...]
    pbp: tuple[Fraction, ...]
    pbi: tuple[Fraction, ...]
    ssi: tuple[Fraction, ...]
    dp: tuple[Fraction, ...]
    hp: tuple[Fraction, ...]

    INDICES = ("bs", "pbp", "pbi", "ssi", "dp", "hp")

    def profile(self, kind: str) -> tuple:
        if kind not in self.INDICES:
            raise ValueError(f"unknown index {kind!r}; expected one of {self.INDICES}")
        return getattr(self, kind)

    def to_dict(self) -> dict:
        """JSON-ready mapping; fractions become ``"p/q"`` strings."""
        out: dict = {"bs": list(self.bs)}
        for kind in self.INDICES[1:]:
            out[kind] = [format_rational(x) for x in getattr(self, kind)]
        return out


def validate_mwc_set(voters: VoterSet, candidates: Sequence[Coalition]) -> MwcSet:
    """Check that ``candidates`` form an antichain of nonempty coalitions.

    Input order is preserved.  Raises the first violation found, scanning
    pairs ``(i, j)`` with ``i < j`` in lexicographic order.
    """
    candidates = tuple(candidates)
    if not candidates:
        raise EmptyFamily("EmptyFamily: at least one minimal winning coalition is required")
    grand = voters.grand
    for k, v in enumerate(candidates):
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ValidationError(f"member {k} is not a coalition bitmask: {v!r}")
        if v == 0:
            raise EmptyCoalitionMember(
                f"EmptyCoalitionMember: member {k} is the empty coalition"
            )
        if v & ~grand:
            raise ValidationError(f"member {k} uses voters outside 0..{voters.n - 1}")
    seen: dict[int, int] = {}
    for k, v in enumerate(candidates):
        if v in seen:
            raise DuplicateMember(f"DuplicateMember: members {seen[v]} and {k} are equal")
        seen[v] = k
    for i, a in enumerate(candidates):
        for j in range(i + 1, len(candidates)):
            b = candidates[j]
            both = a & b
            if both == a or both == b:
                raise NotAntichain(i, j)
    assert len(candidates) <= comb(voters.n, voters.n // 2)
    return MwcSet(voters, candidates)
