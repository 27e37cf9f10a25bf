"""Rank sequences and composite scrollar invariants on chains of loops.

All values are immutable after construction and every operation is a pure
function, so everything here is safe for unrestricted concurrent reads.
"""

from .engine import (
    Attempt,
    FillFailure,
    InternalInconsistencyError,
    RankComputation,
    RankSequence,
    ScrollarReport,
    compute_ranks,
    first_jump,
    greedy_fill,
    rank_sequence,
    scrollar_invariants,
)
from .oracle import (
    BudgetExhausted,
    EnumerationBudget,
    ExistenceResult,
    VerificationReport,
    all_deletion_specs,
    any_tableau_exists,
    enumerate_tableaux,
    max_rank,
    special_divisors_exist,
    torus_dimension,
    verify_agreement,
)
from .profiles import (
    DeletionSpec,
    DivisorModel,
    InvalidSpecError,
    TorsionProfile,
    classify_trigonal,
    derive_model,
    gonality,
    i_blocks,
    is_hyperelliptic,
)
from .tableaux import (
    DisplacementTableau,
    DyckWord,
    RectShape,
    base_tableau,
    divisor_tableau,
    dyck_word_of,
    enumerate_types,
    is_valid_tableau,
    render_text,
)
from .trigonal import (
    TrigonalParams,
    UnfilledReport,
    explicit_tableau,
    generic_deletion_spec,
    generic_sigma,
    nonconvexity_pattern,
    trigonal_deletion_spec,
    trigonal_model,
    trigonal_rank,
    trigonal_sigma1,
)

__version__ = "0.1.0"

__all__ = [
    "Attempt",
    "BudgetExhausted",
    "DeletionSpec",
    "DisplacementTableau",
    "DivisorModel",
    "DyckWord",
    "EnumerationBudget",
    "ExistenceResult",
    "FillFailure",
    "InternalInconsistencyError",
    "InvalidSpecError",
    "RankComputation",
    "RankSequence",
    "RectShape",
    "ScrollarReport",
    "TorsionProfile",
    "TrigonalParams",
    "UnfilledReport",
    "VerificationReport",
    "all_deletion_specs",
    "any_tableau_exists",
    "base_tableau",
    "classify_trigonal",
    "compute_ranks",
    "derive_model",
    "divisor_tableau",
    "dyck_word_of",
    "enumerate_tableaux",
    "enumerate_types",
    "explicit_tableau",
    "first_jump",
    "generic_deletion_spec",
    "generic_sigma",
    "gonality",
    "greedy_fill",
    "i_blocks",
    "is_hyperelliptic",
    "is_valid_tableau",
    "max_rank",
    "nonconvexity_pattern",
    "rank_sequence",
    "render_text",
    "scrollar_invariants",
    "special_divisors_exist",
    "torus_dimension",
    "trigonal_deletion_spec",
    "trigonal_model",
    "trigonal_rank",
    "trigonal_sigma1",
    "verify_agreement",
]
