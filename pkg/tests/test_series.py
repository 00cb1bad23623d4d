from fractions import Fraction

import pytest

from partcount.errors import DomainError
from partcount.series import TruncatedSeries, euler_product


def test_multiplication_truncates():
    a = TruncatedSeries((1, 1, 0, 0))
    assert (a * a).coeffs == (1, 2, 1, 0)
    assert (a ** 3).coeffs == (1, 3, 3, 1)
    assert (a ** 5).coeffs == (1, 5, 10, 10)
    assert (a * 3).coeffs == (3, 3, 0, 0)


def test_geometric_inverse_round_trip():
    s = TruncatedSeries.one(12).over_one_minus(3, 2)
    assert s.times_one_minus(3, 2) == TruncatedSeries.one(12)
    assert TruncatedSeries.one(6).over_one_minus(2).coeffs == (1, 0, 1, 0, 1, 0, 1)


def test_fraction_coefficients():
    s = TruncatedSeries((Fraction(1), Fraction(1, 2), Fraction(0)))
    assert (s * s).coeffs == (1, 1, Fraction(1, 4))


def test_order_mismatch_and_bad_args():
    with pytest.raises(DomainError):
        TruncatedSeries((1, 2)) * TruncatedSeries((1,))
    with pytest.raises(DomainError):
        TruncatedSeries.one(-1)
    with pytest.raises(DomainError):
        TruncatedSeries.one(3).over_one_minus(0)


def test_euler_product_head():
    assert euler_product(12).coeffs == (1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1)
    assert euler_product(0).coeffs == (1,)
