"""Exact enumeration of lattice paths constrained by linear boundaries.

The package counts monotone lattice paths that stay weakly or strictly
above a line y = k*x - r or y = x/k - r, entirely in integer and rational
arithmetic.  Closed-form ballot-style sums live in :mod:`.formulas`, an
independent dynamic-programming and exhaustive oracle in :mod:`.oracle`,
explicit path correspondences in :mod:`.bijections`, classical identity
checks in :mod:`.identities`, and grid verification sweeps in
:mod:`.verify`.  The command line entry point is ``latticepaths``.
"""

from .bijections import (
    bohm_rotate,
    bohm_to_unit,
    bohm_unrotate,
    drop_one,
    koroljuk_to_unit,
    lemma_translate,
    lemma_translate_back,
    raise_one,
    reflect_inverse,
    reflect_inverse_back,
    unit_to_bohm,
    unit_to_koroljuk,
)
from .errors import ResourceLimitError, ValidationError
from .exactmath import Rational, as_integer, binomial, generalized_binomial, upper_negation
from .formulas import (
    BohmQuery,
    KoroljukQuery,
    NiederhausenQuery,
    ballot,
    base_case,
    bohm,
    count,
    count_strict,
    count_strict_inv,
    count_weak,
    count_weak_inv,
    fuss_catalan,
    koroljuk_literal,
    koroljuk_reduced,
    niederhausen,
)
from .identities import (
    DEFAULT_SEED,
    CheckReport,
    HagenRotheParams,
    complement_check,
    hagen_rothe,
    hagen_rothe_check,
    niederhausen_forms_check,
    recurrence_check,
    shift_check,
    upper_negation_check,
)
from .model import (
    BoundaryLine,
    LatticePath,
    PathQuery,
    QueryCategory,
    QueryValidation,
    SlopeKind,
    StepKind,
    StepSet,
    Strictness,
    above,
    integer_slope,
    inverse_slope,
    min_ordinate_above,
    normalize_intercept,
    normalize_query,
    path_above,
    strictness_insensitive,
    validate_query,
)
from .oracle import (
    MAX_ENUMERATION_STEPS,
    KoroljukSplit,
    count_stepset,
    dp_count,
    enumerate_paths,
    enumerate_stepset,
)
from .verify import (
    SweepSummary,
    complement_sweep,
    cross_formula_sweep,
    formula_oracle_sweep,
    hagen_rothe_sweep,
    intercept_normalization_sweep,
    koroljuk_equality_sweep,
    recurrence_shift_sweep,
    run_bijections,
    run_identities,
    run_sweep,
    upper_negation_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "BohmQuery",
    "BoundaryLine",
    "CheckReport",
    "DEFAULT_SEED",
    "HagenRotheParams",
    "KoroljukQuery",
    "KoroljukSplit",
    "LatticePath",
    "MAX_ENUMERATION_STEPS",
    "NiederhausenQuery",
    "PathQuery",
    "QueryCategory",
    "QueryValidation",
    "Rational",
    "ResourceLimitError",
    "SlopeKind",
    "StepKind",
    "StepSet",
    "Strictness",
    "SweepSummary",
    "ValidationError",
    "above",
    "as_integer",
    "ballot",
    "base_case",
    "binomial",
    "bohm",
    "bohm_rotate",
    "bohm_to_unit",
    "bohm_unrotate",
    "complement_check",
    "complement_sweep",
    "count",
    "count_stepset",
    "count_strict",
    "count_strict_inv",
    "count_weak",
    "count_weak_inv",
    "cross_formula_sweep",
    "dp_count",
    "drop_one",
    "enumerate_paths",
    "enumerate_stepset",
    "formula_oracle_sweep",
    "fuss_catalan",
    "generalized_binomial",
    "hagen_rothe",
    "hagen_rothe_check",
    "hagen_rothe_sweep",
    "integer_slope",
    "intercept_normalization_sweep",
    "inverse_slope",
    "koroljuk_equality_sweep",
    "koroljuk_literal",
    "koroljuk_reduced",
    "koroljuk_to_unit",
    "lemma_translate",
    "lemma_translate_back",
    "min_ordinate_above",
    "niederhausen",
    "niederhausen_forms_check",
    "normalize_intercept",
    "normalize_query",
    "path_above",
    "raise_one",
    "recurrence_check",
    "recurrence_shift_sweep",
    "reflect_inverse",
    "reflect_inverse_back",
    "run_bijections",
    "run_identities",
    "run_sweep",
    "shift_check",
    "strictness_insensitive",
    "unit_to_bohm",
    "unit_to_koroljuk",
    "upper_negation",
    "upper_negation_check",
    "upper_negation_sweep",
    "validate_query",
]
