"""Definitional power indices, computed by scanning every coalition.

These functions share nothing with the sub-family fold in
:mod:`mwcpower.direct` and serve as its independent check.  Deegan-Packel
and Holler-Packel live here too, since they read the MWC-set directly.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import numpy as np

from .core import MwcSet, TooManyVotersForOracle

MAX_ORACLE_VOTERS = 24


def _check_size(system: MwcSet) -> None:
    if system.n > MAX_ORACLE_VOTERS:
        raise TooManyVotersForOracle(
            f"TooManyVotersForOracle: {system.n} voters, the brute-force oracle "
            f"supports at most {MAX_ORACLE_VOTERS}"
        )


def winning_table(system: MwcSet) -> np.ndarray:
    """``table[A]`` is True iff bitmask ``A`` contains some MWC; ascending bitmask order."""
    _check_size(system)
    coalitions = np.arange(1 << system.n, dtype=np.int64)
    table = np.zeros(coalitions.shape, dtype=bool)
    for v in system.members:
        table |= (coalitions & v) == v
    return table


def _cardinalities(n: int) -> np.ndarray:
    card = np.zeros(1, dtype=np.int64)
    for _ in range(n):
        card = np.concatenate([card, card + 1])
    return card


def swing_counts(system: MwcSet) -> np.ndarray:
    """``out[w, k]``: winning coalitions of size ``k`` for which voter ``w`` is decisive."""
    n = system.n
    table = winning_table(system)
    card = _cardinalities(n)
    out = np.zeros((n, n + 1), dtype=np.int64)
    for w in range(n):
        view = table.reshape(-1, 2, 1 << w)
        swing = view[:, 1, :] & ~view[:, 0, :]
        sizes = card.reshape(-1, 2, 1 << w)[:, 1, :][swing]
        out[w] = np.bincount(sizes, minlength=n + 1)
    return out


def oracle_banzhaf(system: MwcSet) -> list[int]:
    """Swing counts: ``#{C winning : w in C, C minus w losing}``."""
    return [int(row.sum()) for row in swing_counts(system)]


def oracle_ssi(system: MwcSet) -> list[Fraction]:
    """Sum of ``(n-#S)! (#S-1)! / n!`` over the coalitions ``S`` where ``w`` swings."""
    n = system.n
    fact = [factorial(i) for i in range(n + 1)]
    out = []
    for row in swing_counts(system):
        total = sum(int(row[k]) * fact[n - k] * fact[k - 1] for k in range(1, n + 1))
        out.append(Fraction(total, fact[n]))
    return out


def deegan_packel(system: MwcSet) -> list[Fraction]:
    """Each MWC is equally likely and shares its unit equally among its members."""
    share = [Fraction(0)] * system.n
    for v in system.members:
        size = v.bit_count()
        for w in range(system.n):
            if v >> w & 1:
                share[w] += Fraction(1, size)
    return [s / system.m for s in share]


def holler_packel(system: MwcSet) -> list[Fraction]:
    """MWC membership counts, normalised to sum to one."""
    counts = [sum(v >> w & 1 for v in system.members) for w in range(system.n)]
    total = sum(counts)
    return [Fraction(c, total) for c in counts]


def filter_weight_sum(n: int, k: int) -> Fraction:
    """Total Shapley-Shubik weight of all supersets of a ``k``-coalition among ``n`` voters.

    Summed term by term over superset sizes; the closed form is ``1/k``.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    fact_n = factorial(n)
    return sum(
        (
            Fraction(comb(n - k, size - k) * factorial(n - size) * factorial(size - 1), fact_n)
            for size in range(k, n + 1)
        ),
        Fraction(0),
    )
