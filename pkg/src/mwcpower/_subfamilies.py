"""Depth-first fold over all nonempty sub-families of an MWC list.

Each tree node is one sub-family ``{V_i1, .., V_ir}`` with ``i1 < .. < ir``;
its children append one later index, so the union is a single OR away from
the parent's.  The fold records, per distinct union, the net inclusion-
exclusion sign ``sum (-1)**(r-1)`` over sub-families with that union.
"""
from __future__ import annotations

from collections import defaultdict
from typing import Sequence

from .core import SubfamilyBudgetExceeded

DEFAULT_BUDGET = 2**30

# a node is (union, next candidate index, sign)
Node = tuple


def check_budget(m: int, budget: int | None) -> None:
    budget = DEFAULT_BUDGET if budget is None else budget
    terms = 2**m - 1
    if terms > budget:
        raise SubfamilyBudgetExceeded(
            f"SubfamilyBudgetExceeded: {m} coalitions give {terms} sub-families, "
            f"budget is {budget}"
        )


def _fold_nodes(members: Sequence[int], starts: Sequence[Node]) -> dict[int, int]:
    acc: dict[int, int] = defaultdict(int)
    m = len(members)
    stack = list(starts)
    pop, push = stack.pop, stack.append
    while stack:
        union, nxt, sign = pop()
        acc[union] += sign
        child = -sign
        for j in range(nxt, m):
            push((union | members[j], j + 1, child))
    return acc


def _split(members: Sequence[int], pieces: int) -> tuple[dict[int, int], list[Node]]:
    """Expand the tree top-down until every frontier subtree is small.

    Returns the contributions of the expanded interior nodes and the frontier.
    """
    m = len(members)
    limit = max(1, 2**m // (4 * pieces))
    interior: dict[int, int] = defaultdict(int)
    frontier: list[Node] = []
    todo: list[Node] = [(members[i], i + 1, 1) for i in range(m)]
    while todo:
        node = todo.pop()
        union, nxt, sign = node
        if 2 ** (m - nxt) <= limit:
            frontier.append(node)
            continue
        interior[union] += sign
        for j in range(nxt, m):
            todo.append((union | members[j], j + 1, -sign))
    return interior, frontier


def union_coefficients(
    members: Sequence[int], budget: int | None = None, n_jobs: int | None = None
) -> dict[int, int]:
    """Net signed multiplicity of every union of a nonempty sub-family.

    Zero coefficients are dropped.  With ``n_jobs`` > 1 the tree is split and
    folded in worker processes; exact integer merging makes the result
    independent of the split.
    """
    members = tuple(members)
    check_budget(len(members), budget)
    jobs = 1 if n_jobs is None else n_jobs
    if jobs == -1:
        import os

        jobs = os.cpu_count() or 1
    if jobs <= 1 or len(members) < 8:
        acc = _fold_nodes(members, [(members[i], i + 1, 1) for i in range(len(members))])
    else:
        from joblib import Parallel, delayed

        acc, frontier = _split(members, jobs)
        chunks = [frontier[k::jobs] for k in range(jobs)]
        parts = Parallel(n_jobs=jobs)(
            delayed(_fold_nodes)(members, chunk) for chunk in chunks if chunk
        )
        for part in parts:
            for union, c in part.items():
                acc[union] += c
    return {u: c for u, c in acc.items() if c}


def size_union_counts(members: Sequence[int], budget: int | None = None) -> list[dict[int, int]]:
    """Per sub-family size ``r`` (index ``r - 1``), how many sub-families have each union."""
    members = tuple(members)
    m = len(members)
    check_budget(m, budget)
    out: list[dict[int, int]] = [defaultdict(int) for _ in range(m)]
    stack = [(members[i], i + 1, 1) for i in range(m)]
    while stack:
        union, nxt, r = stack.pop()
        out[r - 1][union] += 1
        for j in range(nxt, m):
            stack.append((union | members[j], j + 1, r + 1))
    return out
