from fractions import Fraction as F

import pytest

from casedraw._exact import RootSum, as_fraction, is_square, rational_sqrt


def test_sqrt_two_sum_equals_sqrt_eight():
    assert RootSum.sqrt(2) + RootSum.sqrt(2) == RootSum.sqrt(8)


def test_equal_but_float_noisy():
    a = RootSum(((1, 2), (1, 3)))
    b = RootSum(((F(1, 2), 8), (F(1, 3), 27)))
    assert a == b


def test_strict_order_near_tie():
    # sqrt(10**12 + 1) - 10**6 is about 5e-7, far below the float fast path
    a = RootSum.sqrt(10**12 + 1)
    b = RootSum.sqrt(10**12)
    assert a > b and b < a and a != b


def test_tiny_difference_sign():
    x = RootSum(((1, 5), (1, 7))) - RootSum(((1, F(5, 1) + F(1, 10**18)), (1, 7)))
    assert x.sign() == -1


def test_compare_with_rational():
    assert RootSum.sqrt(4) == 2
    assert RootSum.sqrt(2) < F(3, 2)
    assert RootSum.sqrt(2) > 1


def test_zero():
    assert RootSum.zero() == 0
    assert (RootSum.sqrt(3) - RootSum.sqrt(3)).sign() == 0


def test_canonical_groups_square_ratios():
    assert RootSum(((1, 2), (1, 8), (1, 3))).canonical() == ((F(2), F(3)), (F(3), F(1)))


def test_unhashable():
    with pytest.raises(TypeError):
        hash(RootSum.sqrt(2))


@pytest.mark.parametrize("q, ok", [(F(9, 4), True), (F(2), False), (F(0), True), (F(1, 3), False)])
def test_is_square(q, ok):
    assert is_square(q) is ok


def test_rational_sqrt():
    assert rational_sqrt(F(49, 16)) == F(7, 4)


@pytest.mark.parametrize("raw, want", [("0.1", F(1, 10)), ("3/4", F(3, 4)), (7, F(7)), (F(2, 3), F(2, 3))])
def test_as_fraction(raw, want):
    assert as_fraction(raw) == want


def test_as_fraction_rejects_float():
    with pytest.raises(TypeError):
        as_fraction(0.5)
