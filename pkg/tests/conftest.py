"""Shared fixtures: the worked examples and independent check helpers."""

from __future__ import annotations

from pathlib import Path

import pytest

from mbwm.pcs import PairwiseComparisonSystem, validate_pcs

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def max_deviation(p: PairwiseComparisonSystem, q: PairwiseComparisonSystem) -> float:
    """Largest ratio discrepancy between two systems, by direct arithmetic.

    Deliberately re-derived here from the raw entries so tests do not trust
    the library's own deviation code when judging its outputs.
    """
    worst = 1.0
    for a, b in zip(p.best_to_other + p.other_to_worst, q.best_to_other + q.other_to_worst):
        worst = max(worst, a / b, b / a)
    return worst


@pytest.fixture
def example1() -> PairwiseComparisonSystem:
    return validate_pcs(
        ["c1", "c2", "c3", "c4", "c5"], 1, 4, (2, 1, 5, 3, 8), (4, 8, 3, 3, 1)
    )


@pytest.fixture
def example2() -> PairwiseComparisonSystem:
    return validate_pcs(
        ["c1", "c2", "c3", "c4", "c5"], 1, 4, (2, 1, 4, 5, 9), (3, 9, 2, 2, 1)
    )


@pytest.fixture
def example3() -> PairwiseComparisonSystem:
    return validate_pcs(["c1", "c2", "c3", "c4"], 1, 3, (1, 1, 3, 4), (2, 4, 4, 1))


@pytest.fixture
def consistent3() -> PairwiseComparisonSystem:
    return validate_pcs(["c1", "c2", "c3"], 0, 2, (1, 2, 4), (4, 2, 1))
