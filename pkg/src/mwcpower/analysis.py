from __future__ import annotations

from .core import MwcSet, PowerReport
from .direct import banzhaf_and_shapley, penrose_banzhaf_index, penrose_banzhaf_power
from .oracle import deegan_packel, holler_packel


def analyze(system: MwcSet, budget: int | None = None, n_jobs: int | None = None) -> PowerReport:
    """All six indices for ``system``; Banzhaf and Shapley-Shubik share one traversal."""
    bs, ssi = banzhaf_and_shapley(system, budget, n_jobs)
    return PowerReport(
        voters=system.voters,
        bs=tuple(bs),
        pbp=tuple(penrose_banzhaf_power(bs, system.n)),
        pbi=tuple(penrose_banzhaf_index(bs)),
        ssi=tuple(ssi),
        dp=tuple(deegan_packel(system)),
        hp=tuple(holler_packel(system)),
    )
