import pytest

from cyclic_avoidance.errors import BelowRange
from cyclic_avoidance.sequences import SequenceFamily, binomial, closed_form, fibonacci, pell


def mat_mult(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)] for i in range(2)]


def mat_pow_entry(m, k):
    # [[x, y], [1, 0]]^k, entry (0, 1): independent of the loop implementations
    out = [[1, 0], [0, 1]]
    for _ in range(k):
        out = mat_mult(out, m)
    return out[0][1]


def test_fibonacci_examples():
    assert fibonacci(0) == 0
    assert fibonacci(1) == 1
    assert fibonacci(7) == 13


def test_pell_examples():
    assert pell(0) == 0
    assert pell(1) == 1
    assert pell(3) == 5
    assert pell(4) == 12


@pytest.mark.parametrize("k", range(0, 41))
def test_against_matrix_powers(k):
    assert fibonacci(k) == mat_pow_entry([[1, 1], [1, 0]], k)
    assert pell(k) == mat_pow_entry([[2, 1], [1, 0]], k)


def test_recurrences():
    for k in range(2, 41):
        assert fibonacci(k) == fibonacci(k - 1) + fibonacci(k - 2)
        assert pell(k) == 2 * pell(k - 1) + pell(k - 2)


def test_binomial():
    assert binomial(5, 3) == 10
    assert binomial(7, 0) == 1
    assert binomial(3, 5) == 0


@pytest.mark.parametrize("family, n, expected", [
    (SequenceFamily.FIB_2N_MINUS_3, 2, 1),
    (SequenceFamily.FIB_2N_MINUS_3, 6, 34),
    (SequenceFamily.POW2_N_MINUS_2, 5, 8),
    (SequenceFamily.PELL_N_MINUS_1, 4, 5),
    (SequenceFamily.BINOM_N_3_PLUS_1, 5, 11),
    (SequenceFamily.LINEAR_2N_MINUS_6, 6, 6),
    (SequenceFamily.LINEAR_N_MINUS_2, 3, 1),
    (SequenceFamily.BINOM_N_MINUS_3_2_PLUS_1, 6, 4),
    (SequenceFamily.ONE_LINE_132_COUNT, 4, 3),
])
def test_closed_form(family, n, expected):
    assert closed_form(family, n) == expected


def test_closed_form_below_range():
    for family in SequenceFamily:
        with pytest.raises(BelowRange):
            closed_form(family, family.valid_n_min - 1)
        assert closed_form(family, family.valid_n_min) >= 0
