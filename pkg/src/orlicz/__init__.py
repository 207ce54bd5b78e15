"""Exact Luxemburg norms of simple functions and limit diagnostics for
one-parameter Young-function families."""

from .young import (
    BracketError,
    DomainError,
    FamilySpecError,
    ValidationReport,
    Violation,
    YoungFamily,
    YoungFunction,
    addie_family,
    identity_family,
    iterlog_family,
    logbump_family,
    make_family,
    power_family,
    powerlog_e_family,
    sinpiecewise_family,
    validate,
)
from .measure import (
    InputFormatError,
    MeasureModelError,
    MeasureSpace,
    SimpleFunction,
    distribution,
    ess_sup,
    read_simple_function,
    simple_function_from_json,
    truncate,
)
from .luxemburg import (
    NormResult,
    chebyshev_bound,
    indicator_norm,
    luxemburg_norm,
    modular,
)
from .admissibility import (
    AdmissibilityReport,
    ClassifierConfig,
    FixedPointReport,
    LimitEstimate,
    MonotonicityReport,
    classify,
    classify_sequence,
    geometric_schedule,
    growth_check,
    growth_check_inverse_form,
    limit_of_inverses,
    limit_of_values,
    logbump_transfer,
    phase_locked_schedule,
    tc_fixed_point_check,
    tc_map,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityReport",
    "BracketError",
    "ClassifierConfig",
    "DomainError",
    "FamilySpecError",
    "FixedPointReport",
    "InputFormatError",
    "LimitEstimate",
    "MeasureModelError",
    "MeasureSpace",
    "MonotonicityReport",
    "NormResult",
    "SimpleFunction",
    "ValidationReport",
    "Violation",
    "YoungFamily",
    "YoungFunction",
    "addie_family",
    "chebyshev_bound",
    "classify",
    "classify_sequence",
    "distribution",
    "ess_sup",
    "geometric_schedule",
    "growth_check",
    "growth_check_inverse_form",
    "identity_family",
    "indicator_norm",
    "iterlog_family",
    "limit_of_inverses",
    "limit_of_values",
    "logbump_family",
    "logbump_transfer",
    "luxemburg_norm",
    "make_family",
    "modular",
    "phase_locked_schedule",
    "power_family",
    "powerlog_e_family",
    "read_simple_function",
    "simple_function_from_json",
    "sinpiecewise_family",
    "tc_fixed_point_check",
    "tc_map",
    "truncate",
    "validate",
    "__version__",
]
