"""Deterministic random comparison systems for fuzzing and cross-checks."""

from __future__ import annotations

import math
import random

from .pcs import PairwiseComparisonSystem, validate_pcs

# The conventional 17-point elicitation grid: 1/9 ... 1/2, 1, 2 ... 9.
SCALE_GRID = tuple(1.0 / k for k in range(9, 1, -1)) + tuple(
    float(k) for k in range(1, 10)
)


def random_pcs(
    rng: random.Random, n: int | None = None, grid: bool = True
) -> PairwiseComparisonSystem:
    """A valid random system with n criteria (n drawn from 3..9 if omitted).

    Grid draws use the 17-point scale; continuous draws are log-uniform on
    [1/9, 9], matching how judgments spread multiplicatively.
    """
    if n is None:
        n = rng.randint(3, 9)
    if n < 2:
        raise ValueError("need at least 2 criteria")

    def draw() -> float:
        if grid:
            return rng.choice(SCALE_GRID)
        return math.exp(rng.uniform(math.log(1.0 / 9.0), math.log(9.0)))

    best = rng.randrange(n)
    worst = rng.choice([i for i in range(n) if i != best])
    bto = [draw() for _ in range(n)]
    otw = [draw() for _ in range(n)]
    a_bw = draw()
    bto[best] = 1.0
    otw[worst] = 1.0
    bto[worst] = a_bw
    otw[best] = a_bw
    return validate_pcs(
        labels=[f"c{i + 1}" for i in range(n)],
        best=best,
        worst=worst,
        best_to_other=bto,
        other_to_worst=otw,
    )
