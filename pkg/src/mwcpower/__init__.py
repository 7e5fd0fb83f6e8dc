"""Voting power indices computed from minimal winning coalitions, exactly."""
from .analysis import analyze
from .atlas import count_antichains, enumerate_antichains, profile_atlas, sperner_bound
from .core import (
    AtlasSizeExceeded,
    DuplicateMember,
    EmptyCoalitionMember,
    EmptyFamily,
    MwcSet,
    NotAntichain,
    PowerIndexError,
    PowerReport,
    ResourceLimitError,
    SubfamilyBudgetExceeded,
    TooManyVotersForDerivation,
    TooManyVotersForOracle,
    ValidationError,
    VoterSet,
    WeightedGame,
    ZeroDenominator,
    rational_reduce,
    validate_mwc_set,
)
from .direct import (
    banzhaf_scores,
    penrose_banzhaf_index,
    penrose_banzhaf_power,
    shapley_shubik,
    trace,
)
from .estimator import MwcDeriver, PowerIndices
from .games import count_winning, derive_mwc, is_decisive, is_proper, is_winning
from .oracle import deegan_packel, filter_weight_sum, holler_packel, oracle_banzhaf, oracle_ssi
from .validation import check_system, parse_document

__version__ = "0.1.0"
