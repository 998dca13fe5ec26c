"""Independent numeric reference solver for the consistency minimax problem.

This module deliberately avoids the closed forms in :mod:`mbwm.core`.  It
answers "is there a consistent system within multiplicative distance eta of
the input?" by plain interval intersection in log space, and minimises eta
by bisection.  Because the feasibility test is exact interval arithmetic,
the solver stays trustworthy even if the analytic path has a bug; the two
are compared in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NO_CONVERGENCE, ComputationError
from .pcs import PairwiseComparisonSystem

DEFAULT_TOLERANCE = 1e-10
MAX_ITERATIONS = 200


@dataclass(frozen=True)
class OracleResult:
    """Outcome of the bisection solve."""

    eta_star: float
    witness: PairwiseComparisonSystem
    iterations: int
    tolerance_used: float


def _log_cross_window(pcs: PairwiseComparisonSystem, eta: float) -> tuple[float, float]:
    """Admissible range of log(adjusted best-over-worst value) at level eta.

    The adjusted system must keep the cross value within eta of a_bw, and for
    every middle criterion i the chained product constraint confines it to
    [product_i / eta^2, product_i * eta^2].  Everything is intersected in log
    space so reciprocal pairs are handled symmetrically.
    """
    t = math.log(eta)
    lo = math.log(pcs.a_bw) - t
    hi = math.log(pcs.a_bw) + t
    for i in pcs.middle:
        lp = math.log(pcs.product(i))
        lo = max(lo, lp - 2.0 * t)
        hi = min(hi, lp + 2.0 * t)
    return lo, hi


def _witness_from(pcs: PairwiseComparisonSystem, eta: float) -> PairwiseComparisonSystem:
    """Build a consistent system at level eta from the interval midpoints."""
    lo, hi = _log_cross_window(pcs, eta)
    log_bw = 0.5 * (lo + hi)
    t = math.log(eta)
    bto = list(pcs.best_to_other)
    otw = list(pcs.other_to_worst)
    bw = math.exp(log_bw)
    bto[pcs.worst] = bw
    otw[pcs.best] = bw
    bto[pcs.best] = 1.0
    otw[pcs.worst] = 1.0
    for i, a_bi, a_iw in pcs.triples():
        lo_i = max(math.log(a_bi) - t, log_bw - t - math.log(a_iw))
        hi_i = min(math.log(a_bi) + t, log_bw + t - math.log(a_iw))
        log_bi = 0.5 * (lo_i + hi_i)
        bto[i] = math.exp(log_bi)
        otw[i] = math.exp(log_bw - log_bi)
    return PairwiseComparisonSystem(
        labels=pcs.labels,
        best=pcs.best,
        worst=pcs.worst,
        best_to_other=tuple(bto),
        other_to_worst=tuple(otw),
    )


def feasible(
    pcs: PairwiseComparisonSystem,
    eta: float,
    with_witness: bool = False,
) -> bool | tuple[bool, PairwiseComparisonSystem | None]:
    """Whether a consistent system exists within distance eta of the input."""
    if eta < 1.0:
        ok = False
    else:
        lo, hi = _log_cross_window(pcs, eta)
        ok = lo <= hi
    if not with_witness:
        return ok
    return ok, (_witness_from(pcs, eta) if ok else None)


def solve(
    pcs: PairwiseComparisonSystem, tolerance: float = DEFAULT_TOLERANCE
) -> OracleResult:
    """Minimise the distance level by bisection over [1, U].

    U is one more than the worst chained-product imbalance, which is feasible
    by construction.  Terminates when the bracketing interval is narrower
    than ``tolerance`` and returns its midpoint.
    """
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    upper = 1.0
    for i in pcs.middle:
        p = pcs.product(i)
        upper = max(upper, p / pcs.a_bw, pcs.a_bw / p)
    upper += 1.0

    lo, hi = 1.0, upper
    if feasible(pcs, lo):
        hi = lo
    iterations = 0
    while hi - lo > tolerance:
        iterations += 1
        if iterations > MAX_ITERATIONS:
            raise ComputationError(
                f"bisection did not reach width {tolerance} within "
                f"{MAX_ITERATIONS} iterations (last bracket [{lo}, {hi}])",
                NO_CONVERGENCE,
            )
        mid = 0.5 * (lo + hi)
        if feasible(pcs, mid):
            hi = mid
        else:
            lo = mid
    eta_star = 0.5 * (lo + hi) if hi > lo else lo
    return OracleResult(
        eta_star=eta_star,
        witness=_witness_from(pcs, hi if hi >= 1.0 else 1.0),
        iterations=iterations,
        tolerance_used=tolerance,
    )
