from itertools import permutations

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from src.tasks.padovan import (
    Matrix3,
    det3,
    minor22,
    padovan,
    q_matrix,
    q_power,
    q_power_closed_form,
)


def test_padovan_opening_terms():
    expected = [0, 0, 1, 0, 1, 1, 1, 2, 2, 3, 4, 5, 7, 9, 12, 16, 21, 28, 37, 49, 65]
    assert [padovan(k) for k in range(len(expected))] == expected
    assert padovan(12) == 7
    assert padovan(20) == 65


def test_padovan_recurrence_up_to_500():
    values = [padovan(k) for k in range(501)]
    for k in range(3, 501):
        assert values[k] == values[k - 2] + values[k - 3]


def test_padovan_rejects_negative_index():
    with pytest.raises(ValueError):
        padovan(-1)


def test_q_matrix():
    q = q_matrix()
    assert q.rows == ((0, 1, 0), (0, 0, 1), (1, 1, 0))
    assert det3(q) == 1
    assert tuple(sum(row) for row in q.rows) == (1, 1, 2)


def test_q_power_small_values():
    assert q_power(1) == q_matrix()
    assert q_power(4).rows == ((0, 1, 1), (1, 1, 1), (1, 2, 1))
    assert q_power(7).entry(3, 2) == padovan(10) == 4


def test_q_power_matches_repeated_multiplication():
    product = q_matrix()
    for n in range(2, 31):
        product = product @ q_matrix()
        assert q_power(n) == product


def test_q_power_closed_form_and_unit_determinant():
    for n in range(1, 201):
        qn = q_power(n)
        assert qn == q_power_closed_form(n)
        assert det3(qn) == 1


@pytest.mark.parametrize("n", [0, -3])
def test_q_power_rejects_non_positive(n):
    with pytest.raises(ValueError):
        q_power(n)


@given(st.integers(1, 60), st.integers(1, 60))
def test_q_power_is_additive_in_exponent(a, b):
    assert q_power(a + b) == q_power(a) @ q_power(b)


def test_q_power_grows_past_machine_words():
    assert q_power(400).label(9) == padovan(402)
    assert padovan(402) > 2 ** 64


def test_det3_values():
    assert det3(Matrix3.from_rows([[11, 8, 15], [15, 18, 3], [4, 15, 4]])) == 2208
    assert det3(Matrix3.identity()) == 1


def test_minor22_values():
    assert minor22(Matrix3.from_rows([[11, 8, 15], [15, 18, 3], [4, 15, 4]])) == -16
    assert minor22(Matrix3.identity()) == 1
    assert minor22(Matrix3.from_rows([[4, 15, 4], [26, 13, 8], [17, 4, 17]])) == 0


def _permutation_sign(perm):
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def _brute_force_det(matrix):
    total = 0
    for perm in permutations(range(3)):
        term = _permutation_sign(perm)
        for row, col in enumerate(perm):
            term *= matrix.rows[row][col]
        total += term
    return total


@settings(max_examples=1000)
@given(st.lists(st.integers(-100, 100), min_size=9, max_size=9))
def test_det3_agrees_with_permutation_sum(values):
    matrix = Matrix3.from_labels(values)
    assert det3(matrix) == _brute_force_det(matrix)


def test_matrix_labels_are_one_based_row_major():
    m = Matrix3.from_labels(range(1, 10))
    assert m.label(1) == 1 and m.label(5) == 5 and m.label(9) == 9
    assert m.entry(2, 3) == 6
    with pytest.raises(IndexError):
        m.label(0)
    with pytest.raises(ValueError):
        Matrix3.from_labels([1, 2, 3])
