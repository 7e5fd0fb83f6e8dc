"""Semantics of a voting system given by its MWC-set."""
from __future__ import annotations

from math import lcm

import numpy as np

from ._subfamilies import union_coefficients
from .core import (
    Coalition,
    MwcSet,
    TooManyVotersForDerivation,
    WeightedGame,
    validate_mwc_set,
)

MAX_DERIVATION_VOTERS = 24


def is_winning(system: MwcSet, a: Coalition) -> bool:
    """A coalition wins iff it contains some minimal winning coalition."""
    for v in system.members:
        if v & a == v:
            return True
    return False


def is_decisive(system: MwcSet, w: int, a: Coalition) -> bool:
    bit = 1 << w
    if not a & bit:
        return False
    return is_winning(system, a) and not is_winning(system, a & ~bit)


def is_proper(system: MwcSet) -> bool:
    """No coalition wins together with its complement.

    Equivalent to pairwise intersection of the MWCs: disjoint ``V_i, V_j``
    make ``V_i`` and its complement (a superset of ``V_j``) both winning.
    """
    members = system.members
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if not a & b:
                return False
    return True


def count_winning(system: MwcSet, budget: int | None = None) -> int:
    """Number of winning coalitions, by inclusion-exclusion over principal filters."""
    n = system.n
    return sum(
        c << (n - u.bit_count())
        for u, c in union_coefficients(system.members, budget).items()
    )


def _integer_weights(game: WeightedGame) -> tuple[list[int], int]:
    scale = lcm(*(w.denominator for w in game.weights), game.quota.denominator)
    weights = [int(w * scale) for w in game.weights]
    return weights, int(game.quota * scale)


def _winning_table(weights: list[int], quota: int) -> np.ndarray:
    """Boolean table over all ``2**n`` bitmasks: does the coalition meet the quota."""
    if sum(weights) < 2**62:
        sums = np.zeros(1, dtype=np.int64)
        for w in weights:
            sums = np.concatenate([sums, sums + w])
        return sums >= quota
    sums_obj = [0]
    for w in weights:
        sums_obj = sums_obj + [s + w for s in sums_obj]
    return np.fromiter((s >= quota for s in sums_obj), dtype=bool, count=len(sums_obj))


def derive_mwc(game: WeightedGame) -> MwcSet:
    """Minimal winning coalitions of a weighted game, by exhaustive enumeration.

    Every coalition whose weight meets the quota and drops below it when any
    single member leaves is kept.  Output is sorted by (cardinality, bitmask).
    """
    n = game.voters.n
    if n > MAX_DERIVATION_VOTERS:
        raise TooManyVotersForDerivation(
            f"TooManyVotersForDerivation: {n} voters, exhaustive derivation supports "
            f"at most {MAX_DERIVATION_VOTERS}"
        )
    weights, quota = _integer_weights(game)
    winning = _winning_table(weights, quota)
    minimal = winning.copy()
    for i in range(n):
        # axis 1 of this view is bit i: 0 = without voter i, 1 = with
        win_view = winning.reshape(-1, 2, 1 << i)
        min_view = minimal.reshape(-1, 2, 1 << i)
        min_view[:, 1, :] &= ~win_view[:, 0, :]
    found = [int(x) for x in np.flatnonzero(minimal)]
    found.sort(key=lambda c: (c.bit_count(), c))
    return validate_mwc_set(game.voters, found)
