"""Assembly of full evaluation and check responses from the core operations."""

from __future__ import annotations

from typing import Any, Mapping

from .. import core
from ..hierarchy import HierarchySpec, global_weights
from ..pcs import PairwiseComparisonSystem
from . import schemas


def check_response(
    pcs: PairwiseComparisonSystem, options: Mapping[str, Any] | None = None
) -> dict[str, Any]:
    """Consistency-only feedback; by design this never touches weights."""
    options = options or {}
    diag = core.diagnostics(pcs)
    report = core.consistency_ratio(pcs, normalize=bool(options.get("normalize_cr")))
    return schemas.check_to_obj(pcs, diag, report)


def evaluate_response(
    pcs: PairwiseComparisonSystem, options: Mapping[str, Any] | None = None
) -> dict[str, Any]:
    """Full evaluation: consistency, intervals, best system, weights, profile."""
    options = options or {}
    diag = core.diagnostics(pcs)
    modified = core.best_modified_pcs(pcs, diag)
    weights = core.consistent_weights(modified)
    report = core.full_consistency_report(
        pcs, weights, normalize=bool(options.get("normalize_cr"))
    )
    intervals = core.interval_weights(pcs, diag)
    deviations = report.deviations
    assert deviations is not None
    return {
        "request": schemas.request_to_obj(pcs, options),
        "diagnostics": schemas.diagnostics_to_obj(pcs, diag),
        "consistency": {
            "eps_star": report.eps_star,
            "ci": report.consistency_index,
            "cr": report.consistency_ratio,
            "cr_normalized": report.normalized,
            "consistent": report.consistent,
        },
        "interval_weights": schemas.intervals_to_obj(intervals),
        "best_modified_pcs": schemas.pcs_to_obj(modified),
        "best_weights": schemas.weights_to_obj(weights),
        "deviations": {
            label: value for label, value in zip(pcs.labels, deviations)
        },
        "warnings": list(report.scale_warnings),
    }


def hierarchy_response(spec: HierarchySpec) -> dict[str, Any]:
    return schemas.ranking_to_obj(global_weights(spec))
