"""HOMFLY-PT polynomials and braid indices of Type 3 pretzel links.

The package pairs closed-form degree formulas and braid-index case trees with
an independent memoized skein engine, so every formula can be verified by
exhaustive sweep against recursion from first principles.
"""

from .braid_index import (
    BraidIndexResult,
    CrossCheckError,
    DispatchGapError,
    FormulaEe,
    alternating_profile,
    braid_index,
    formula_Ee,
    lower_bound,
    resolved_instances,
    theorem_case,
)
from .engine import (
    DELTA,
    EngineCache,
    HomflyProfile,
    PretzelState,
    SignClass,
    connected_sum_profile,
    connected_sum_value,
    fib_f,
    homfly,
    profile,
    state_for,
    torus_antiparallel,
    torus_parallel,
    unlink_delta,
)
from .laurent import ONE, ZERO, LaurentParseError, LaurentPoly2, ZPoly
from .pretzel import (
    TWO_COMPONENT_UNLINK,
    LinkType,
    PretzelInputError,
    RawPretzel,
    Type3Grouping,
    classify,
    component_count,
    enumerate_type3,
    parse_group,
    parse_strips,
    standardize,
)
from .seifert import Move, ReductionPlan, SeifertStats, compute_stats, upper_bound

__all__ = [
    "BraidIndexResult",
    "CrossCheckError",
    "DELTA",
    "DispatchGapError",
    "EngineCache",
    "FormulaEe",
    "HomflyProfile",
    "LaurentParseError",
    "LaurentPoly2",
    "LinkType",
    "Move",
    "ONE",
    "PretzelInputError",
    "PretzelState",
    "RawPretzel",
    "ReductionPlan",
    "SeifertStats",
    "SignClass",
    "TWO_COMPONENT_UNLINK",
    "Type3Grouping",
    "ZERO",
    "ZPoly",
    "alternating_profile",
    "braid_index",
    "classify",
    "component_count",
    "compute_stats",
    "connected_sum_profile",
    "connected_sum_value",
    "enumerate_type3",
    "fib_f",
    "formula_Ee",
    "homfly",
    "lower_bound",
    "parse_group",
    "parse_strips",
    "profile",
    "resolved_instances",
    "standardize",
    "state_for",
    "theorem_case",
    "torus_antiparallel",
    "torus_parallel",
    "unlink_delta",
    "upper_bound",
]
