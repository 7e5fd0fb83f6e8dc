"""scikit-learn style wrappers so index computation composes with pipelines and ``clone``."""
from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .analysis import analyze
from .core import PowerReport
from .direct import trace
from .validation import check_system


class PowerIndices(BaseEstimator):
    """Compute every power index of a voting system.

    Parameters
    ----------
    index : {"bs", "pbp", "pbi", "ssi", "dp", "hp"}
        Profile returned by :meth:`transform`.
    budget : int, optional
        Maximum number of MWC sub-families to visit (default ``2**30``).
    n_jobs : int, optional
        Worker processes for the sub-family traversal; results do not
        depend on it.

    Attributes
    ----------
    mwc_ : MwcSet
    report_ : PowerReport
    banzhaf_score_, penrose_banzhaf_power_, penrose_banzhaf_index_,
    shapley_shubik_, deegan_packel_, holler_packel_ : tuple
    """

    def __init__(self, index: str = "ssi", budget: int | None = None, n_jobs: int | None = None):
        self.index = index
        self.budget = budget
        self.n_jobs = n_jobs

    def fit(self, X, y=None):
        """``X`` is one system: MwcSet, WeightedGame, document mapping or index lists."""
        self._check_index()
        system = check_system(X)
        report = analyze(system, self.budget, self.n_jobs)
        self.mwc_ = system
        self.report_ = report
        self.n_voters_ = system.n
        self.banzhaf_score_ = report.bs
        self.penrose_banzhaf_power_ = report.pbp
        self.penrose_banzhaf_index_ = report.pbi
        self.shapley_shubik_ = report.ssi
        self.deegan_packel_ = report.dp
        self.holler_packel_ = report.hp
        return self

    def transform(self, X) -> list[tuple]:
        """Map an iterable of systems to their ``index`` profiles."""
        self._check_index()
        return [analyze(check_system(s), self.budget, self.n_jobs).profile(self.index) for s in X]

    def trace(self, voter: int, kind: str = "bs"):
        check_is_fitted(self, "mwc_")
        return trace(self.mwc_, voter, kind, self.budget)

    @property
    def profile_(self) -> tuple:
        check_is_fitted(self, "report_")
        return self.report_.profile(self.index)

    def _check_index(self):
        if self.index not in PowerReport.INDICES:
            raise ValueError(f"index must be one of {PowerReport.INDICES}, got {self.index!r}")


class MwcDeriver(TransformerMixin, BaseEstimator):
    """Stateless transformer: systems (weighted or not) to validated MWC-sets."""

    def fit(self, X=None, y=None):
        return self

    def transform(self, X):
        return [check_system(s) for s in X]
