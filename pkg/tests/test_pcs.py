"""Validation of raw comparison data."""

import math

import pytest

from mbwm.errors import ValidationError
from mbwm.pcs import is_consistent, scale_warnings, validate_pcs


def test_example1_is_valid(example1):
    assert example1.n == 5
    assert example1.a_bw == 8
    assert example1.middle == (0, 2, 3)
    assert example1.labels[example1.best] == "c2"
    assert example1.labels[example1.worst] == "c5"


def test_best_diagonal_must_be_one():
    with pytest.raises(ValidationError) as err:
        validate_pcs(["a", "b", "c"], 0, 2, (2, 2, 4), (4, 2, 1))
    assert err.value.code == "DIAGONAL_NOT_ONE"


def test_worst_diagonal_must_be_one():
    with pytest.raises(ValidationError) as err:
        validate_pcs(["a", "b", "c"], 0, 2, (1, 2, 4), (4, 2, 3))
    assert err.value.code == "DIAGONAL_NOT_ONE"


def test_cross_values_must_agree():
    with pytest.raises(ValidationError) as err:
        validate_pcs(["a", "b", "c"], 0, 2, (1, 2, 8), (9, 2, 1))
    assert err.value.code == "CROSS_MISMATCH"


def test_best_equals_worst():
    with pytest.raises(ValidationError) as err:
        validate_pcs(["a", "b"], 0, 0, (1, 2), (2, 1))
    assert err.value.code == "BEST_EQUALS_WORST"


@pytest.mark.parametrize("bad", [0.0, -1.0, math.inf, math.nan])
def test_entries_must_be_positive_finite(bad):
    with pytest.raises(ValidationError) as err:
        validate_pcs(["a", "b", "c"], 0, 2, (1, bad, 4), (4, 2, 1))
    assert err.value.code == "NONPOSITIVE_ENTRY"


@pytest.mark.parametrize(
    "bto,otw",
    [((1, 2), (4, 2, 1)), ((1, 2, 4), (4, 1)), ((1, 2, 4, 4), (4, 2, 1))],
)
def test_vector_lengths_must_match(bto, otw):
    with pytest.raises(ValidationError) as err:
        validate_pcs(["a", "b", "c"], 0, 2, bto, otw)
    assert err.value.code == "BAD_LENGTH"


def test_indices_must_be_in_range():
    with pytest.raises(ValidationError) as err:
        validate_pcs(["a", "b", "c"], 0, 5, (1, 2, 4), (4, 2, 1))
    assert err.value.code == "BAD_LENGTH"


def test_duplicate_labels_rejected():
    with pytest.raises(ValidationError) as err:
        validate_pcs(["a", "a", "c"], 0, 2, (1, 2, 4), (4, 2, 1))
    assert err.value.code == "BAD_LENGTH"


def test_out_of_scale_entries_warn_but_validate():
    pcs = validate_pcs(["a", "b", "c"], 0, 2, (1, 12, 20), (20, 3, 1))
    warnings = scale_warnings(pcs)
    assert len(warnings) == 3
    assert any("b" in w and "12" in w for w in warnings)
    assert scale_warnings(validate_pcs(["a", "b"], 0, 1, (1, 9), (9, 1))) == ()


def test_is_consistent(example1, consistent3):
    assert is_consistent(consistent3)
    assert not is_consistent(example1)
