"""Closed-form solver for multiplicative best-worst weight elicitation.

Everything here is direct arithmetic on the comparison values: the optimal
consistency level, the forced entries of any optimally adjusted system, the
per-criterion ranges those systems can take, the interval weights, the
unique best adjusted system, and the input-based consistency index/ratio.
No numeric optimisation is involved; :mod:`mbwm.oracle` provides the
independent reference solver used to cross-check all of it.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from typing import Mapping, Sequence

from .errors import BAD_LENGTH, NONPOSITIVE_ENTRY, NOT_CONSISTENT, ValidationError
from .pcs import (
    CONSISTENCY_RTOL,
    PairwiseComparisonSystem,
    is_consistent,
    scale_warnings,
)

# Two candidate consistency levels are treated as tied below this gap.
TIE_ATOL = 1e-12

# A modified system: same shape as the input, consistent by construction.
ModifiedPcs = PairwiseComparisonSystem


class Case(str, enum.Enum):
    """Which closed-form branch attains the optimal consistency level."""

    CONSISTENT = "CONSISTENT"
    CASE_I0 = "CASE_I0"
    CASE_J0 = "CASE_J0"
    CASE_I0J0 = "CASE_I0J0"


@dataclass(frozen=True)
class WeightSet:
    """Normalised positive weights, one per criterion."""

    labels: tuple[str, ...]
    values: tuple[float, ...]

    def __getitem__(self, i: int) -> float:
        return self.values[i]

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.labels, self.values))


@dataclass(frozen=True)
class IntervalWeights:
    """Per-criterion range [lower_i, upper_i] of the optimal weights."""

    labels: tuple[str, ...]
    lower: tuple[float, ...]
    upper: tuple[float, ...]

    def __getitem__(self, i: int) -> tuple[float, float]:
        return self.lower[i], self.upper[i]


@dataclass(frozen=True)
class ConsistencyDiagnostics:
    """Imbalance analysis of a comparison system.

    ``eps_i`` bounds the consistency level from a single criterion's chained
    product, ``eps_ij`` from a pair of products; ``eps_star`` is the optimal
    level itself, attained by the branch named in ``case``.  ``d1``/``d2``
    hold the criteria whose chained product under-/over-shoots the cross
    value; ``i0``/``j0`` are the extreme ones.  ``tied_cases`` lists every
    branch whose candidate value ties with the maximum.
    """

    eps_i: Mapping[int, float]
    eps_ij: Mapping[tuple[int, int], float]
    d1: tuple[int, ...]
    d2: tuple[int, ...]
    i0: int | None
    j0: int | None
    case: Case
    eps_star: float
    tied_cases: tuple[Case, ...]


@dataclass(frozen=True)
class FixedReferenceValues:
    """Entries every optimally adjusted system is forced to share.

    The adjusted cross value ``a_bw`` is unique in all cases; in addition the
    branch-specific extreme criteria have both of their entries pinned.
    """

    a_bw: float
    best_to_other: Mapping[int, float]
    other_to_worst: Mapping[int, float]


@dataclass(frozen=True)
class ModifiedPcsIntervals:
    """Admissible ranges of the adjusted entries across all optimal systems.

    For each non-reference criterion ``i`` the adjusted best-to-other value
    may lie anywhere in ``best_to_other[i]``; the matching other-to-worst
    value is then pinned to ``a_bw / value`` and ranges over
    ``other_to_worst[i]``.
    """

    a_bw: float
    best_to_other: Mapping[int, tuple[float, float]]
    other_to_worst: Mapping[int, tuple[float, float]]


@dataclass(frozen=True)
class ConsistencyReport:
    """Input-based consistency summary, available before any weights."""

    eps_star: float
    consistency_index: float
    consistency_ratio: float
    normalized: bool
    case: Case
    deviations: tuple[float, ...] | None
    scale_warnings: tuple[str, ...]

    @property
    def consistent(self) -> bool:
        return self.eps_star == 1.0


def consistent_weights(pcs: PairwiseComparisonSystem) -> WeightSet:
    """Weights of a consistent system: w_j proportional to a_jw.

    Raises NOT_CONSISTENT when some chained product a_bi * a_iw strays from
    the cross value a_bw by more than the relative tolerance.
    """
    if not is_consistent(pcs, CONSISTENCY_RTOL):
        worst_i = max(
            pcs.middle, key=lambda i: abs(pcs.product(i) / pcs.a_bw - 1.0)
        )
        raise ValidationError(
            f"system is not consistent: chained product through "
            f"{pcs.labels[worst_i]!r} is {pcs.product(worst_i):g} but the "
            f"best-over-worst value is {pcs.a_bw:g}",
            NOT_CONSISTENT,
        )
    total = sum(pcs.other_to_worst)
    return WeightSet(
        labels=pcs.labels,
        values=tuple(v / total for v in pcs.other_to_worst),
    )


def diagnostics(pcs: PairwiseComparisonSystem) -> ConsistencyDiagnostics:
    """Classify the system's inconsistency and compute its optimal level.

    The single-criterion bound is the cube root of the chained-product
    imbalance; the pair bound is the fourth root of the ratio between two
    chained products.  The optimal level is the largest bound, attained
    either at the lowest product (i0), the highest (j0), or across the pair.
    """
    a_bw = pcs.a_bw
    middle = pcs.middle

    eps_i: dict[int, float] = {}
    for i in middle:
        p = pcs.product(i)
        eps_i[i] = max(p / a_bw, a_bw / p) ** (1.0 / 3.0)

    eps_ij: dict[tuple[int, int], float] = {}
    for a in range(len(middle)):
        for b in range(a + 1, len(middle)):
            i, j = middle[a], middle[b]
            pi, pj = pcs.product(i), pcs.product(j)
            eps_ij[(i, j)] = max(pi / pj, pj / pi) ** 0.25

    d1 = tuple(i for i in middle if pcs.product(i) < a_bw)
    d2 = tuple(i for i in middle if pcs.product(i) > a_bw)

    i0 = min(middle, key=lambda i: (pcs.product(i), i)) if d1 else None
    j0 = max(middle, key=lambda i: (pcs.product(i), -i)) if d2 else None

    candidates: list[tuple[Case, float]] = []
    if i0 is not None:
        candidates.append((Case.CASE_I0, eps_i[i0]))
    if j0 is not None:
        candidates.append((Case.CASE_J0, eps_i[j0]))
    if i0 is not None and j0 is not None:
        key = (i0, j0) if i0 < j0 else (j0, i0)
        candidates.append((Case.CASE_I0J0, eps_ij[key]))

    if not candidates:
        return ConsistencyDiagnostics(
            eps_i=eps_i,
            eps_ij=eps_ij,
            d1=d1,
            d2=d2,
            i0=None,
            j0=None,
            case=Case.CONSISTENT,
            eps_star=1.0,
            tied_cases=(),
        )

    # The extreme-criteria candidates attain this maximum; taking it over the
    # full maps keeps the reported level identical to them bit for bit.
    eps_star = max(*eps_i.values(), *eps_ij.values(), 1.0)
    tied = tuple(case for case, value in candidates if eps_star - value <= TIE_ATOL)
    if eps_star == 1.0:
        # Products can straddle a_bw by less than a rounding step; treat as
        # consistent rather than emit a branch tag with a unit level.
        case = Case.CONSISTENT
    elif tied:
        case = tied[0]  # candidate order encodes the I0 > J0 > I0J0 precedence
    else:
        case = max(candidates, key=lambda cv: cv[1])[0]
    return ConsistencyDiagnostics(
        eps_i=eps_i,
        eps_ij=eps_ij,
        d1=d1,
        d2=d2,
        i0=i0,
        j0=j0,
        case=case,
        eps_star=eps_star,
        tied_cases=tied if len(tied) > 1 else (),
    )


def fixed_reference_values(
    pcs: PairwiseComparisonSystem, diag: ConsistencyDiagnostics | None = None
) -> FixedReferenceValues:
    """Entries shared by every optimally adjusted system.

    The adjusted cross value is a_bw / eps* when the low extreme binds,
    eps* * a_bw when the high extreme binds, and eps*^2 * (chained product
    of the low extreme) when the pair binds; the binding criteria's own
    entries are scaled by eps* towards feasibility.
    """
    diag = diag or diagnostics(pcs)
    eps = diag.eps_star
    bto: dict[int, float] = {}
    otw: dict[int, float] = {}
    if diag.case is Case.CONSISTENT:
        return FixedReferenceValues(a_bw=pcs.a_bw, best_to_other=bto, other_to_worst=otw)
    if diag.case is Case.CASE_I0:
        i0 = diag.i0
        assert i0 is not None
        bto[i0] = eps * pcs.best_to_other[i0]
        otw[i0] = eps * pcs.other_to_worst[i0]
        a_bw = pcs.a_bw / eps
    elif diag.case is Case.CASE_J0:
        j0 = diag.j0
        assert j0 is not None
        bto[j0] = pcs.best_to_other[j0] / eps
        otw[j0] = pcs.other_to_worst[j0] / eps
        a_bw = eps * pcs.a_bw
    else:
        i0, j0 = diag.i0, diag.j0
        assert i0 is not None and j0 is not None
        bto[i0] = eps * pcs.best_to_other[i0]
        otw[i0] = eps * pcs.other_to_worst[i0]
        bto[j0] = pcs.best_to_other[j0] / eps
        otw[j0] = pcs.other_to_worst[j0] / eps
        a_bw = bto[i0] * otw[i0]
    return FixedReferenceValues(a_bw=a_bw, best_to_other=bto, other_to_worst=otw)


def modified_pcs_intervals(
    pcs: PairwiseComparisonSystem, diag: ConsistencyDiagnostics | None = None
) -> ModifiedPcsIntervals:
    """Per-criterion ranges the adjusted entries take over all optima.

    Each best-to-other entry is confined both by its own eps*-band around the
    input value and by the band implied through the fixed cross value; the
    branch-binding criteria collapse to their forced values.
    """
    diag = diag or diagnostics(pcs)
    fixed = fixed_reference_values(pcs, diag)
    eps = diag.eps_star
    a_bw = fixed.a_bw
    bto: dict[int, tuple[float, float]] = {}
    otw: dict[int, tuple[float, float]] = {}
    for i, a_bi, a_iw in pcs.triples():
        if i in fixed.best_to_other:
            bto[i] = (fixed.best_to_other[i], fixed.best_to_other[i])
            otw[i] = (fixed.other_to_worst[i], fixed.other_to_worst[i])
            continue
        lo = max(a_bi / eps, a_bw / (eps * a_iw))
        hi = min(eps * a_bi, eps * a_bw / a_iw)
        if lo > hi:
            # mathematically a point; rounding can cross the endpoints
            lo = hi = 0.5 * (lo + hi)
        bto[i] = (lo, hi)
        otw[i] = (a_bw / hi, a_bw / lo)
    return ModifiedPcsIntervals(a_bw=a_bw, best_to_other=bto, other_to_worst=otw)


def _other_to_worst_bounds(
    pcs: PairwiseComparisonSystem, diag: ConsistencyDiagnostics
) -> tuple[list[float], list[float]]:
    """Range of each adjusted other-to-worst entry, reference criteria included.

    The best criterion's entry is the fixed cross value and the worst one's
    is exactly 1; the middle entries come from the interval analysis.
    """
    intervals = modified_pcs_intervals(pcs, diag)
    lo = [0.0] * pcs.n
    hi = [0.0] * pcs.n
    lo[pcs.best] = hi[pcs.best] = intervals.a_bw
    lo[pcs.worst] = hi[pcs.worst] = 1.0
    for i in pcs.middle:
        lo[i], hi[i] = intervals.other_to_worst[i]
    return lo, hi


def interval_weights(
    pcs: PairwiseComparisonSystem, diag: ConsistencyDiagnostics | None = None
) -> IntervalWeights:
    """Range each criterion's weight takes across all optimal weight sets.

    A weight's lower end pairs its own smallest adjusted other-to-worst
    entry with everyone else's largest, and vice versa for the upper end.
    """
    diag = diag or diagnostics(pcs)
    lo, hi = _other_to_worst_bounds(pcs, diag)
    sum_lo, sum_hi = sum(lo), sum(hi)
    lower = tuple(lo[i] / (lo[i] + (sum_hi - hi[i])) for i in range(pcs.n))
    # near-degenerate ranges can land an ulp out of order after division
    upper = tuple(
        max(hi[i] / (hi[i] + (sum_lo - lo[i])), lower[i]) for i in range(pcs.n)
    )
    return IntervalWeights(labels=pcs.labels, lower=lower, upper=upper)


def best_modified_pcs(
    pcs: PairwiseComparisonSystem, diag: ConsistencyDiagnostics | None = None
) -> ModifiedPcs:
    """The unique consistent system closest to the input, criterion by criterion.

    Among all optimally adjusted systems this one also minimises each
    criterion's own deviation pair, which makes it unique; its worst
    deviation from the input equals the optimal consistency level exactly.
    """
    diag = diag or diagnostics(pcs)
    if diag.case is Case.CONSISTENT:
        return pcs
    eps = diag.eps_star
    a_bw = pcs.a_bw
    bto = [0.0] * pcs.n
    otw = [0.0] * pcs.n
    if diag.case is Case.CASE_I0:
        scale = a_bw / eps
    elif diag.case is Case.CASE_J0:
        scale = eps * a_bw
    else:
        i0 = diag.i0
        assert i0 is not None
        scale = eps * eps * pcs.product(i0)
    # The adjusted entries split the fixed cross value geometrically around
    # the input ratio a_bi / a_iw, which keeps both deviations equal.
    for i, a_bi, a_iw in pcs.triples():
        bto[i] = math.sqrt(scale * a_bi / a_iw)
        otw[i] = math.sqrt(scale * a_iw / a_bi)
    bto[pcs.best] = 1.0
    otw[pcs.worst] = 1.0
    bto[pcs.worst] = scale
    otw[pcs.best] = scale
    return PairwiseComparisonSystem(
        labels=pcs.labels,
        best=pcs.best,
        worst=pcs.worst,
        best_to_other=tuple(bto),
        other_to_worst=tuple(otw),
    )


def best_weight_set(pcs: PairwiseComparisonSystem) -> WeightSet:
    """Weights of the best adjusted system (the method's headline output)."""
    return consistent_weights(best_modified_pcs(pcs))


def consistency_index(a_bw: float) -> float:
    """Largest consistency level any system with this cross value can reach.

    Equals sqrt(a_bw) on the conventional scale where a_bw >= 1; the cube
    root branch covers cross values below 1.
    """
    if not isinstance(a_bw, (int, float)) or isinstance(a_bw, bool):
        raise ValidationError(
            f"cross value must be a number, got {a_bw!r}", NONPOSITIVE_ENTRY
        )
    if not math.isfinite(a_bw) or a_bw <= 0:
        raise ValidationError(
            f"cross value must be positive and finite, got {a_bw!r}",
            NONPOSITIVE_ENTRY,
        )
    return max(a_bw ** (1.0 / 3.0), math.sqrt(a_bw))


def consistency_ratio(
    pcs: PairwiseComparisonSystem, normalize: bool = False
) -> ConsistencyReport:
    """Input-based consistency ratio; no weights are computed.

    The default ratio is eps* / CI(a_bw), which is 1/CI (not 0) for a
    consistent system.  With ``normalize`` the report carries
    (eps* - 1) / (CI - 1) instead, which is 0 exactly for consistent input;
    when CI is 1 (cross value 1) that denominator degenerates and the excess
    eps* - 1 is reported.
    """
    diag = diagnostics(pcs)
    ci = consistency_index(pcs.a_bw)
    if normalize:
        if ci > 1.0:
            cr = (diag.eps_star - 1.0) / (ci - 1.0)
        else:
            cr = diag.eps_star - 1.0
    else:
        cr = diag.eps_star / ci
    return ConsistencyReport(
        eps_star=diag.eps_star,
        consistency_index=ci,
        consistency_ratio=cr,
        normalized=normalize,
        case=diag.case,
        deviations=None,
        scale_warnings=scale_warnings(pcs),
    )


def full_consistency_report(
    pcs: PairwiseComparisonSystem,
    weights: WeightSet | None = None,
    normalize: bool = False,
) -> ConsistencyReport:
    """Consistency ratio plus the deviation profile of a weight set.

    Defaults to the best weight set; unlike :func:`consistency_ratio` this
    does solve for weights.
    """
    report = consistency_ratio(pcs, normalize=normalize)
    if weights is None:
        weights = best_weight_set(pcs)
    return replace(report, deviations=deviation_profile(pcs, weights))


def deviation_profile(
    pcs: PairwiseComparisonSystem, weights: WeightSet | Sequence[float]
) -> tuple[float, ...]:
    """Worst ratio discrepancy between stated judgments and a weight set.

    For each criterion the implied ratios w_best/w_j and w_j/w_worst are
    compared against the stated values in both directions; the reference
    criteria only contribute their cross-value comparison because their own
    entries are the fixed diagonal 1.
    """
    values = weights.values if isinstance(weights, WeightSet) else tuple(weights)
    if len(values) != pcs.n:
        raise ValidationError(
            f"expected {pcs.n} weights, got {len(values)}", BAD_LENGTH
        )
    if any(v <= 0 for v in values):
        raise ValidationError("weights must be strictly positive", NONPOSITIVE_ENTRY)
    w_b, w_w = values[pcs.best], values[pcs.worst]
    out = []
    for j in range(pcs.n):
        r_best = w_b / values[j]
        r_worst = values[j] / w_w
        a_bj = pcs.best_to_other[j]
        a_jw = pcs.other_to_worst[j]
        out.append(
            max(a_bj / r_best, r_best / a_bj, a_jw / r_worst, r_worst / a_jw)
        )
    return tuple(out)
