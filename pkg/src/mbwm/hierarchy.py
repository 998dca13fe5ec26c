"""Two-level weighting: categories of criteria, several experts, one ranking.

Each expert supplies a comparison system for the categories and one for the
leaves inside every category.  Expert weight sets are averaged per node,
then a leaf's global weight is its category weight times its local weight.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .core import WeightSet, best_weight_set
from .errors import BAD_LENGTH, LENGTH_MISMATCH, MbwmError, ValidationError
from .pcs import PairwiseComparisonSystem

AGGREGATIONS = ("arithmetic", "geometric")


@dataclass(frozen=True)
class CategoryNode:
    """A category together with one leaf-level PCS per expert."""

    label: str
    leaves: tuple[str, ...]
    expert_pcs: tuple[PairwiseComparisonSystem, ...]


@dataclass(frozen=True)
class HierarchySpec:
    """Category layer plus per-expert comparison data for every node."""

    categories: tuple[CategoryNode, ...]
    category_expert_pcs: tuple[PairwiseComparisonSystem, ...]
    aggregation: str = "arithmetic"


@dataclass(frozen=True)
class RankedLeaf:
    category: str
    leaf: str
    local_weight: float
    global_weight: float
    rank: int


@dataclass(frozen=True)
class RankedWeights:
    """Globally ranked leaves plus the category weights they derive from."""

    leaves: tuple[RankedLeaf, ...]
    category_weights: dict[str, float] = field(compare=False)


def aggregate_experts(
    weight_sets: Sequence[WeightSet], aggregation: str = "arithmetic"
) -> WeightSet:
    """Combine expert weight sets per criterion, renormalised to sum 1."""
    if not weight_sets:
        raise ValidationError("need at least one expert weight set", LENGTH_MISMATCH)
    n = len(weight_sets[0].values)
    for k, ws in enumerate(weight_sets):
        if len(ws.values) != n:
            raise ValidationError(
                f"expert {k} has {len(ws.values)} weights, expected {n}",
                LENGTH_MISMATCH,
            )
    if aggregation not in AGGREGATIONS:
        raise ValidationError(
            f"unknown aggregation {aggregation!r}, expected one of {AGGREGATIONS}",
            BAD_LENGTH,
        )
    if len(weight_sets) == 1:
        return weight_sets[0]
    stacked = np.array([ws.values for ws in weight_sets], dtype=float)
    if aggregation == "arithmetic":
        combined = stacked.mean(axis=0)
    else:
        combined = np.exp(np.log(stacked).mean(axis=0))
    combined = combined / combined.sum()
    return WeightSet(labels=weight_sets[0].labels, values=tuple(combined.tolist()))


def _validate_spec(spec: HierarchySpec) -> None:
    if not spec.categories:
        raise ValidationError("hierarchy has no categories", BAD_LENGTH)
    n_experts = len(spec.category_expert_pcs)
    if len(spec.categories) == 1:
        # A single category cannot be compared against anything; it takes
        # weight 1 and the category-level expert list must stay empty.
        if n_experts:
            raise ValidationError(
                "a single-category hierarchy takes no category-level "
                "comparisons",
                LENGTH_MISMATCH,
            )
        n_experts = len(spec.categories[0].expert_pcs)
    if n_experts < 1:
        raise ValidationError(
            "need at least one expert at the category level", LENGTH_MISMATCH
        )
    labels = tuple(c.label for c in spec.categories)
    if len(set(labels)) != len(labels):
        raise ValidationError("category labels must be unique", BAD_LENGTH)
    for pcs in spec.category_expert_pcs:
        if pcs.labels != labels:
            raise ValidationError(
                f"category-level system must compare the categories "
                f"{labels} in order, got {pcs.labels}",
                LENGTH_MISMATCH,
            )
    for cat in spec.categories:
        if len(cat.expert_pcs) != n_experts:
            raise ValidationError(
                f"category {cat.label!r} has {len(cat.expert_pcs)} expert "
                f"systems but the category level has {n_experts}",
                LENGTH_MISMATCH,
            )
        for pcs in cat.expert_pcs:
            if pcs.labels != tuple(cat.leaves):
                raise ValidationError(
                    f"category {cat.label!r} leaf systems must compare "
                    f"{tuple(cat.leaves)} in order, got {pcs.labels}",
                    LENGTH_MISMATCH,
                )


def _node_weights(
    expert_pcs: Sequence[PairwiseComparisonSystem], aggregation: str, where: str
) -> WeightSet:
    try:
        per_expert = [best_weight_set(pcs) for pcs in expert_pcs]
    except MbwmError as err:
        raise type(err)(f"{where}: {err.detail}", err.code) from err
    return aggregate_experts(per_expert, aggregation)


def global_weights(spec: HierarchySpec) -> RankedWeights:
    """Rank every leaf by category weight times aggregated local weight."""
    _validate_spec(spec)
    if len(spec.categories) == 1:
        category_ws = WeightSet(labels=(spec.categories[0].label,), values=(1.0,))
    else:
        category_ws = _node_weights(
            spec.category_expert_pcs, spec.aggregation, "category level"
        )
    rows: list[tuple[str, str, float, float]] = []
    for k, cat in enumerate(spec.categories):
        local = _node_weights(
            cat.expert_pcs, spec.aggregation, f"category {cat.label!r}"
        )
        for leaf, lw in zip(cat.leaves, local.values):
            rows.append((cat.label, leaf, lw, category_ws.values[k] * lw))
    ranks = _dense_ranks([g for _, _, _, g in rows])
    leaves = tuple(
        RankedLeaf(category=c, leaf=l, local_weight=lw, global_weight=gw, rank=r)
        for (c, l, lw, gw), r in zip(rows, ranks)
    )
    return RankedWeights(
        leaves=leaves, category_weights=dict(zip(category_ws.labels, category_ws.values))
    )


def _dense_ranks(values: Sequence[float], atol: float = 1e-12) -> list[int]:
    """Dense descending ranks; values within atol share a rank."""
    order = sorted(range(len(values)), key=lambda i: -values[i])
    ranks = [0] * len(values)
    rank = 0
    prev: float | None = None
    for i in order:
        if prev is None or prev - values[i] > atol:
            rank += 1
            prev = values[i]
        ranks[i] = rank
    return ranks
