"""Weight elicitation for the multiplicative best-worst method.

The package computes, in closed form, the optimal consistency level of a
best-worst comparison system, the unique best consistent modification of it,
per-criterion optimal weight intervals, the best weight set, and an
input-based consistency index/ratio.  An independent bisection solver
(:mod:`mbwm.oracle`) cross-checks every analytic result, and
:mod:`mbwm.hierarchy` combines category- and leaf-level systems from several
experts into a global ranking.
"""

from .core import (
    Case,
    ConsistencyDiagnostics,
    ConsistencyReport,
    FixedReferenceValues,
    IntervalWeights,
    ModifiedPcsIntervals,
    WeightSet,
    best_modified_pcs,
    best_weight_set,
    consistency_index,
    consistency_ratio,
    consistent_weights,
    deviation_profile,
    diagnostics,
    fixed_reference_values,
    full_consistency_report,
    interval_weights,
    modified_pcs_intervals,
)
from .errors import ComputationError, MbwmError, ValidationError
from .hierarchy import (
    CategoryNode,
    HierarchySpec,
    RankedLeaf,
    RankedWeights,
    aggregate_experts,
    global_weights,
)
from .oracle import OracleResult, feasible, solve
from .pcs import PairwiseComparisonSystem, is_consistent, scale_warnings, validate_pcs

__version__ = "1.0.0"

__all__ = [
    "Case",
    "CategoryNode",
    "ComputationError",
    "ConsistencyDiagnostics",
    "ConsistencyReport",
    "FixedReferenceValues",
    "HierarchySpec",
    "IntervalWeights",
    "MbwmError",
    "ModifiedPcsIntervals",
    "OracleResult",
    "PairwiseComparisonSystem",
    "RankedLeaf",
    "RankedWeights",
    "ValidationError",
    "WeightSet",
    "aggregate_experts",
    "best_modified_pcs",
    "best_weight_set",
    "consistency_index",
    "consistency_ratio",
    "consistent_weights",
    "deviation_profile",
    "diagnostics",
    "feasible",
    "fixed_reference_values",
    "full_consistency_report",
    "global_weights",
    "interval_weights",
    "is_consistent",
    "modified_pcs_intervals",
    "scale_warnings",
    "solve",
    "validate_pcs",
]
