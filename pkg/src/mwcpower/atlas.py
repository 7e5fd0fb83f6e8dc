"""Every voting system on a small labelled voter set, and the power profiles they realise."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Iterator

from .analysis import analyze
from .core import AtlasSizeExceeded, MwcSet, PowerReport, ValidationError, VoterSet

MAX_ATLAS_VOTERS = 6
MAX_PROFILE_VOTERS = 5

PROFILE_KINDS = ("bs", "pbp", "pbi", "ssi", "dp", "hp")


@dataclass(frozen=True)
class AtlasEntry:
    system: MwcSet
    report: PowerReport


@dataclass
class ProfileAtlas:
    """Distinct profiles with multiplicities.

    ``ordered`` keys are value vectors in voter order; ``unordered`` keys are
    the same vectors sorted in descending order.
    """

    n: int
    kind: str
    systems: int = 0
    ordered: Counter = field(default_factory=Counter)
    unordered: Counter = field(default_factory=Counter)


def sperner_bound(n: int) -> int:
    """Largest possible antichain in the subsets of an ``n``-set."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return comb(n, n // 2)


def _check_atlas_size(n: int, cap: int) -> None:
    if n < 1:
        raise ValidationError("n must be at least 1")
    if n > cap:
        raise AtlasSizeExceeded(f"AtlasSizeExceeded: n={n}, supported up to {cap}")


def _candidate_order(n: int) -> tuple[list[int], list[int]]:
    """Nonempty subsets by (cardinality, bitmask) and, per position, the positions comparable to it."""
    subsets = sorted(range(1, 1 << n), key=lambda s: (s.bit_count(), s))
    comparable = []
    for a in subsets:
        mask = 0
        for p, b in enumerate(subsets):
            both = a & b
            if both == a or both == b:
                mask |= 1 << p
        comparable.append(mask)
    return subsets, comparable


def _antichains(n: int) -> Iterator[tuple[int, ...]]:
    subsets, comparable = _candidate_order(n)

    def extend(chosen: tuple[int, ...], frontier: int) -> Iterator[tuple[int, ...]]:
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            p = low.bit_length() - 1
            grown = chosen + (subsets[p],)
            yield grown
            yield from extend(grown, frontier & ~comparable[p])

    start = (1 << len(subsets)) - 1
    return extend((), start)


def enumerate_antichains(n: int) -> Iterator[MwcSet]:
    """Yield every MWC-set over voters ``1..n`` exactly once (labelled count).

    Backtracking over nonempty subsets in (cardinality, bitmask) order; after
    a subset is taken, every subset comparable to it leaves the frontier, so
    each branch stays an antichain.  Members come out in that same order.
    """
    _check_atlas_size(n, MAX_ATLAS_VOTERS)
    voters = VoterSet.of_size(n)
    for members in _antichains(n):
        yield MwcSet(voters, members)


def count_antichains(n: int) -> int:
    """Same backtracking tree as :func:`enumerate_antichains`, counted without building sets."""
    _check_atlas_size(n, MAX_ATLAS_VOTERS)
    subsets, comparable = _candidate_order(n)

    def count(frontier: int) -> int:
        total = 0
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            total += 1 + count(frontier & ~comparable[low.bit_length() - 1])
        return total

    return count((1 << len(subsets)) - 1)


def atlas_entries(n: int, budget: int | None = None) -> Iterator[AtlasEntry]:
    _check_atlas_size(n, MAX_PROFILE_VOTERS)
    for system in enumerate_antichains(n):
        yield AtlasEntry(system, analyze(system, budget))


def profile_atlas(n: int, kind: str = "pbi") -> ProfileAtlas:
    """Tally the distinct ``kind`` profiles over all systems with ``n`` voters."""
    kind = kind.lower()
    if kind not in PROFILE_KINDS:
        raise ValueError(f"unknown index {kind!r}; expected one of {PROFILE_KINDS}")
    atlas = ProfileAtlas(n, kind)
    for entry in atlas_entries(n):
        profile = entry.report.profile(kind)
        atlas.systems += 1
        atlas.ordered[profile] += 1
        atlas.unordered[tuple(sorted(profile, reverse=True))] += 1
    return atlas
