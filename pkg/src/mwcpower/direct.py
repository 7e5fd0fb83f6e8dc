"""Banzhaf scores and Shapley-Shubik indices straight from the MWC-set.

For every nonempty sub-family of MWCs with union ``U`` and size ``r``, each
voter in ``U`` receives ``(-1)**(r-1) * 2**(n - #U)`` towards its Banzhaf
score and ``(-1)**(r-1) / #U`` towards its Shapley-Shubik index.  Nothing
else is needed: no list of winning coalitions is ever built.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Literal, Sequence

from ._subfamilies import size_union_counts, union_coefficients
from .core import MwcSet, members_of


@dataclass(frozen=True)
class TraceReport:
    """Cumulative value for one voter after all sub-families of size <= r."""

    kind: Literal["bs", "ssi"]
    voter: int
    partial_sums: tuple

    @property
    def final(self):
        return self.partial_sums[-1]


def _scores_from_coefficients(n: int, coefficients: dict[int, int]) -> list[int]:
    bs = [0] * n
    for union, c in coefficients.items():
        term = c << (n - union.bit_count())
        for w in members_of(union):
            bs[w] += term
    return bs


def _ssi_from_coefficients(n: int, coefficients: dict[int, int]) -> list[Fraction]:
    # integer accumulation over the common denominator lcm(1..n)
    denom = lcm(*range(1, n + 1))
    num = [0] * n
    for union, c in coefficients.items():
        term = c * (denom // union.bit_count())
        for w in members_of(union):
            num[w] += term
    return [Fraction(x, denom) for x in num]


def banzhaf_scores(
    system: MwcSet, budget: int | None = None, n_jobs: int | None = None
) -> list[int]:
    """Banzhaf score of every voter in one traversal of the sub-family tree.

    Raises :class:`~mwcpower.core.SubfamilyBudgetExceeded` when ``2**m - 1``
    exceeds ``budget`` (default ``2**30``).
    """
    coefficients = union_coefficients(system.members, budget, n_jobs)
    return _scores_from_coefficients(system.n, coefficients)


def shapley_shubik(
    system: MwcSet, budget: int | None = None, n_jobs: int | None = None
) -> list[Fraction]:
    """Shapley-Shubik index of every voter, exact."""
    coefficients = union_coefficients(system.members, budget, n_jobs)
    return _ssi_from_coefficients(system.n, coefficients)


def banzhaf_and_shapley(
    system: MwcSet, budget: int | None = None, n_jobs: int | None = None
) -> tuple[list[int], list[Fraction]]:
    """Both vectors from a single traversal."""
    coefficients = union_coefficients(system.members, budget, n_jobs)
    return (
        _scores_from_coefficients(system.n, coefficients),
        _ssi_from_coefficients(system.n, coefficients),
    )


def penrose_banzhaf_power(bs: Sequence[int], n: int) -> list[Fraction]:
    """Probability of being decisive: ``BS / 2**(n-1)``."""
    half = 1 << (n - 1)
    return [Fraction(b, half) for b in bs]


def penrose_banzhaf_index(bs: Sequence[int]) -> list[Fraction]:
    total = sum(bs)
    assert total >= 1, "a valid system has at least one decisive voter"
    return [Fraction(b, total) for b in bs]


def trace(
    system: MwcSet, w: int, kind: Literal["bs", "ssi"] = "bs", budget: int | None = None
) -> TraceReport:
    """Step-by-step partial sums for voter ``w``, one entry per sub-family size."""
    if kind not in ("bs", "ssi"):
        raise ValueError(f"kind must be 'bs' or 'ssi', got {kind!r}")
    if not 0 <= w < system.n:
        raise ValueError(f"voter index {w} out of range for {system.n} voters")
    n = system.n
    bit = 1 << w
    running = Fraction(0) if kind == "ssi" else 0
    sums = []
    for r, counts in enumerate(size_union_counts(system.members, budget), start=1):
        sign = 1 if r % 2 else -1
        for union, count in counts.items():
            if not union & bit:
                continue
            if kind == "bs":
                running += sign * count << (n - union.bit_count())
            else:
                running += Fraction(sign * count, union.bit_count())
        sums.append(running)
    return TraceReport(kind, w, tuple(sums))
