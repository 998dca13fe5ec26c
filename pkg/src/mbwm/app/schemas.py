"""JSON and CSV wire formats.

Comparison values are keyed by criterion name everywhere, never by position,
so a spreadsheet row shuffle cannot silently reassign judgments.  The
canonical field order of a serialised system follows its criteria array.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Mapping

from ..core import (
    ConsistencyDiagnostics,
    ConsistencyReport,
    IntervalWeights,
    WeightSet,
)
from ..errors import PARSE_ERROR, UNSUPPORTED_DEPTH, ValidationError
from ..hierarchy import CategoryNode, HierarchySpec, RankedWeights
from ..pcs import PairwiseComparisonSystem, validate_pcs

CSV_COLUMNS = ("criterion", "role", "best_to_other", "other_to_worst")


def _require(obj: Mapping[str, Any], key: str, kind: type, where: str) -> Any:
    if key not in obj:
        raise ValidationError(f"{where}: missing key {key!r}", PARSE_ERROR)
    value = obj[key]
    if kind is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ValidationError(
                f"{where}: {key!r} must be a number, got {value!r}", PARSE_ERROR
            )
        return float(value)
    if not isinstance(value, kind):
        raise ValidationError(
            f"{where}: {key!r} must be {kind.__name__}, got {type(value).__name__}",
            PARSE_ERROR,
        )
    return value


def _vector(
    obj: Mapping[str, Any], key: str, criteria: list[str], where: str
) -> list[float]:
    table = _require(obj, key, dict, where)
    unknown = sorted(set(table) - set(criteria))
    if unknown:
        raise ValidationError(
            f"{where}: {key!r} names unknown criteria {unknown}", PARSE_ERROR
        )
    missing = [c for c in criteria if c not in table]
    if missing:
        raise ValidationError(
            f"{where}: {key!r} is missing entries for {missing}", PARSE_ERROR
        )
    out = []
    for c in criteria:
        v = table[c]
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise ValidationError(
                f"{where}: {key!r}[{c!r}] must be a number, got {v!r}", PARSE_ERROR
            )
        out.append(float(v))
    return out


def parse_pcs(
    obj: Any, criteria: list[str] | None = None, where: str = "pcs"
) -> PairwiseComparisonSystem:
    """Parse one comparison system from decoded JSON.

    ``criteria`` supplies the criterion list when the enclosing document
    already defines it (hierarchy nodes); a ``criteria`` key present in both
    places must agree.
    """
    if not isinstance(obj, dict):
        raise ValidationError(f"{where}: expected an object", PARSE_ERROR)
    if "criteria" in obj:
        listed = _require(obj, "criteria", list, where)
        if not all(isinstance(c, str) for c in listed):
            raise ValidationError(
                f"{where}: criteria must be a list of names", PARSE_ERROR
            )
        if criteria is not None and list(criteria) != list(listed):
            raise ValidationError(
                f"{where}: criteria {listed} disagree with the enclosing "
                f"definition {list(criteria)}",
                PARSE_ERROR,
            )
        criteria = list(listed)
    elif criteria is None:
        raise ValidationError(f"{where}: missing key 'criteria'", PARSE_ERROR)
    else:
        criteria = list(criteria)

    best = _require(obj, "best", str, where)
    worst = _require(obj, "worst", str, where)
    for name, role in ((best, "best"), (worst, "worst")):
        if name not in criteria:
            raise ValidationError(
                f"{where}: {role} criterion {name!r} is not in the criteria list",
                PARSE_ERROR,
            )
    bto = _vector(obj, "best_to_other", criteria, where)
    otw = _vector(obj, "other_to_worst", criteria, where)
    try:
        return validate_pcs(
            labels=criteria,
            best=criteria.index(best),
            worst=criteria.index(worst),
            best_to_other=bto,
            other_to_worst=otw,
        )
    except ValidationError as err:
        if where == "pcs" or where == "request":
            raise
        raise ValidationError(f"{where}: {err.detail}", err.code) from err


def parse_options(obj: Any, where: str = "request") -> dict[str, Any]:
    """Evaluation options; unknown option names are rejected."""
    options = {"normalize_cr": False}
    if not isinstance(obj, dict) or "options" not in obj:
        return options
    raw = obj["options"]
    if not isinstance(raw, dict):
        raise ValidationError(f"{where}: 'options' must be an object", PARSE_ERROR)
    unknown = sorted(set(raw) - set(options))
    if unknown:
        raise ValidationError(
            f"{where}: unknown options {unknown}", PARSE_ERROR
        )
    if "normalize_cr" in raw:
        if not isinstance(raw["normalize_cr"], bool):
            raise ValidationError(
                f"{where}: option 'normalize_cr' must be a boolean", PARSE_ERROR
            )
        options["normalize_cr"] = raw["normalize_cr"]
    return options


def parse_request(obj: Any) -> tuple[PairwiseComparisonSystem, dict[str, Any]]:
    """Parse an evaluation request: a PCS plus options.

    A ``ui`` key is tolerated and ignored so that session files exported by
    the front end remain valid service input.
    """
    pcs = parse_pcs(obj, where="request")
    return pcs, parse_options(obj)


def loads_request(text: str) -> tuple[PairwiseComparisonSystem, dict[str, Any]]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as err:
        raise ValidationError(f"invalid JSON: {err}", PARSE_ERROR) from err
    return parse_request(obj)


def pcs_to_obj(pcs: PairwiseComparisonSystem) -> dict[str, Any]:
    """Canonical JSON form of a system (fields follow the criteria array)."""
    return {
        "criteria": list(pcs.labels),
        "best": pcs.labels[pcs.best],
        "worst": pcs.labels[pcs.worst],
        "best_to_other": {
            label: value for label, value in zip(pcs.labels, pcs.best_to_other)
        },
        "other_to_worst": {
            label: value for label, value in zip(pcs.labels, pcs.other_to_worst)
        },
    }


def request_to_obj(
    pcs: PairwiseComparisonSystem, options: Mapping[str, Any] | None = None
) -> dict[str, Any]:
    out = pcs_to_obj(pcs)
    if options:
        out["options"] = dict(options)
    return out


def dumps_canonical(obj: Any) -> str:
    """Stable JSON encoding: fixed separators, preserved key order."""
    return json.dumps(obj, separators=(",", ":"), allow_nan=False)


def parse_pcs_csv(text: str) -> PairwiseComparisonSystem:
    """Parse the spreadsheet-friendly CSV form.

    One row per criterion with columns criterion, role, best_to_other,
    other_to_worst; exactly one row carries role 'best' and one 'worst'
    (values alone cannot identify them because 1 may appear anywhere).
    """
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None or tuple(
        name.strip() for name in reader.fieldnames
    ) != CSV_COLUMNS:
        raise ValidationError(
            f"CSV header must be {','.join(CSV_COLUMNS)}", PARSE_ERROR
        )
    criteria: list[str] = []
    bto: list[float] = []
    otw: list[float] = []
    best: str | None = None
    worst: str | None = None
    for row_no, row in enumerate(reader, start=2):
        name = (row["criterion"] or "").strip()
        if not name:
            raise ValidationError(f"CSV line {row_no}: empty criterion name", PARSE_ERROR)
        role = (row["role"] or "").strip().lower()
        if role == "best":
            if best is not None:
                raise ValidationError("CSV marks two rows as best", PARSE_ERROR)
            best = name
        elif role == "worst":
            if worst is not None:
                raise ValidationError("CSV marks two rows as worst", PARSE_ERROR)
            worst = name
        elif role:
            raise ValidationError(
                f"CSV line {row_no}: role must be 'best', 'worst' or empty, "
                f"got {role!r}",
                PARSE_ERROR,
            )
        try:
            bto.append(float(row["best_to_other"]))
            otw.append(float(row["other_to_worst"]))
        except (TypeError, ValueError) as err:
            raise ValidationError(
                f"CSV line {row_no}: comparison values must be numbers", PARSE_ERROR
            ) from err
        criteria.append(name)
    if best is None or worst is None:
        raise ValidationError(
            "CSV must mark one row with role 'best' and one with 'worst'",
            PARSE_ERROR,
        )
    return validate_pcs(
        labels=criteria,
        best=criteria.index(best),
        worst=criteria.index(worst),
        best_to_other=bto,
        other_to_worst=otw,
    )


def parse_hierarchy(obj: Any) -> HierarchySpec:
    """Parse the two-level hierarchy document."""
    if not isinstance(obj, dict):
        raise ValidationError("hierarchy: expected an object", PARSE_ERROR)
    raw_categories = _require(obj, "categories", list, "hierarchy")
    aggregation = obj.get("aggregation", "arithmetic")
    if not isinstance(aggregation, str):
        raise ValidationError("hierarchy: 'aggregation' must be a string", PARSE_ERROR)
    categories = []
    names: list[str] = []
    for k, raw in enumerate(raw_categories):
        where = f"categories[{k}]"
        if not isinstance(raw, dict):
            raise ValidationError(f"{where}: expected an object", PARSE_ERROR)
        if "categories" in raw:
            raise ValidationError(
                f"{where}: nested categories are not supported (two levels only)",
                UNSUPPORTED_DEPTH,
            )
        name = _require(raw, "name", str, where)
        leaves = _require(raw, "leaves", list, where)
        if not all(isinstance(l, str) for l in leaves):
            raise ValidationError(f"{where}: leaves must be names", PARSE_ERROR)
        raw_experts = _require(raw, "experts_pcs", list, where)
        expert_pcs = tuple(
            parse_pcs(e, criteria=list(leaves), where=f"{where}.experts_pcs[{j}]")
            for j, e in enumerate(raw_experts)
        )
        names.append(name)
        categories.append(
            CategoryNode(label=name, leaves=tuple(leaves), expert_pcs=expert_pcs)
        )
    raw_cat_experts = _require(obj, "category_experts_pcs", list, "hierarchy")
    category_expert_pcs = tuple(
        parse_pcs(e, criteria=names, where=f"category_experts_pcs[{j}]")
        for j, e in enumerate(raw_cat_experts)
    )
    return HierarchySpec(
        categories=tuple(categories),
        category_expert_pcs=category_expert_pcs,
        aggregation=aggregation,
    )


def diagnostics_to_obj(
    pcs: PairwiseComparisonSystem, diag: ConsistencyDiagnostics
) -> dict[str, Any]:
    label = lambda i: pcs.labels[i]  # noqa: E731
    return {
        "eps_i": {label(i): v for i, v in diag.eps_i.items()},
        "eps_ij": [
            {"pair": [label(i), label(j)], "value": v}
            for (i, j), v in diag.eps_ij.items()
        ],
        "d1": [label(i) for i in diag.d1],
        "d2": [label(i) for i in diag.d2],
        "i0": label(diag.i0) if diag.i0 is not None else None,
        "j0": label(diag.j0) if diag.j0 is not None else None,
        "case": diag.case.value,
        "eps_star": diag.eps_star,
        "tied_cases": [c.value for c in diag.tied_cases],
    }


def check_to_obj(
    pcs: PairwiseComparisonSystem,
    diag: ConsistencyDiagnostics,
    report: ConsistencyReport,
) -> dict[str, Any]:
    obj = diagnostics_to_obj(pcs, diag)
    obj.update(
        {
            "ci": report.consistency_index,
            "cr": report.consistency_ratio,
            "cr_normalized": report.normalized,
            "consistent": report.consistent,
            "warnings": list(report.scale_warnings),
        }
    )
    return obj


def weights_to_obj(ws: WeightSet) -> dict[str, float]:
    return {label: value for label, value in zip(ws.labels, ws.values)}


def intervals_to_obj(iw: IntervalWeights) -> dict[str, list[float]]:
    return {
        label: [lo, hi] for label, lo, hi in zip(iw.labels, iw.lower, iw.upper)
    }


def ranking_to_obj(ranking: RankedWeights) -> dict[str, Any]:
    return {
        "category_weights": dict(ranking.category_weights),
        "leaves": [
            {
                "category": leaf.category,
                "leaf": leaf.leaf,
                "local_weight": leaf.local_weight,
                "global_weight": leaf.global_weight,
                "rank": leaf.rank,
            }
            for leaf in ranking.leaves
        ],
    }
