"""Exact enumeration, bijections, and truncated q-series checks for
Schmidt-type partition statistics."""

from .bijections import (
    color_conjugate,
    color_conjugate_inverse,
    decompose_multiplicity,
    glaisher_expand,
    glaisher_reduce,
    merge_partitions,
    mork_forward,
    mork_inverse,
)
from .colored import (
    ColoredPartition,
    Overpartition,
    admissible_colors,
    color_counts,
    colored_partitions,
    cs_validate,
    over_stats,
    overpartitions,
)
from .identities import (
    COUNTING_THEOREMS,
    SERIES_IDENTITIES,
    VerificationReport,
    cauchy_check,
    enum_side,
    ln_series,
    product_side,
    size_graded_context,
    sum_side,
    t1_slice_check,
    trivariate_context,
    verify_counting,
    verify_identity,
    witnesses,
)
from .partitions import (
    Partition,
    in_class,
    normalize_residue_set,
    partitions_of,
    partitions_with_schmidt_weight,
    repetition_profile,
    residue_column_count,
    schmidt_weight,
)
from .series import (
    Monomial,
    Series,
    SeriesContext,
    SubstitutionResult,
    geometric_inverse,
    poch_finite,
    poch_infinite,
    poch_infinite_inverse,
    q_binomial,
    q_multinomial,
    substitute_one,
)

__version__ = "0.1.0"

__all__ = [
    "ColoredPartition",
    "COUNTING_THEOREMS",
    "Monomial",
    "Overpartition",
    "Partition",
    "SERIES_IDENTITIES",
    "Series",
    "SeriesContext",
    "SubstitutionResult",
    "VerificationReport",
    "admissible_colors",
    "cauchy_check",
    "color_conjugate",
    "color_conjugate_inverse",
    "color_counts",
    "colored_partitions",
    "cs_validate",
    "decompose_multiplicity",
    "enum_side",
    "geometric_inverse",
    "glaisher_expand",
    "glaisher_reduce",
    "in_class",
    "ln_series",
    "merge_partitions",
    "mork_forward",
    "mork_inverse",
    "normalize_residue_set",
    "over_stats",
    "overpartitions",
    "partitions_of",
    "partitions_with_schmidt_weight",
    "poch_finite",
    "poch_infinite",
    "poch_infinite_inverse",
    "product_side",
    "q_binomial",
    "q_multinomial",
    "repetition_profile",
    "residue_column_count",
    "schmidt_weight",
    "size_graded_context",
    "substitute_one",
    "sum_side",
    "t1_slice_check",
    "trivariate_context",
    "verify_counting",
    "verify_identity",
    "witnesses",
    "__version__",
]
