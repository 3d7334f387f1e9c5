from fractions import Fraction

import pytest
import sympy

from genuslab.series import AlphaSeries, qy_series, todd_series
from genuslab.ypoly import YPolynomial

TODD_LOW_ORDER = [
    Fraction(1),
    Fraction(1, 2),
    Fraction(1, 12),
    Fraction(0),
    Fraction(-1, 720),
    Fraction(0),
    Fraction(1, 30240),
    Fraction(0),
    Fraction(-1, 1209600),
]


def _sympy_series_coeffs(expr, x, order):
    poly = sympy.series(expr, x, 0, order + 1).removeO()
    return [Fraction(str(poly.coeff(x, k))) for k in range(order + 1)]


def test_todd_series_low_order_frozen():
    s = todd_series(8)
    assert s.specialize_y(0) == tuple(TODD_LOW_ORDER)


def test_todd_series_against_symbolic_expansion():
    x = sympy.symbols("x")
    expected = _sympy_series_coeffs(x / (1 - sympy.exp(-x)), x, 12)
    assert list(todd_series(12).specialize_y(0)) == expected


def test_qy_low_order_coefficients():
    s = qy_series(4)
    assert s.coefficient(0) == YPolynomial.one()
    assert s.coefficient(1) == YPolynomial((Fraction(1, 2), Fraction(-1, 2)))
    assert s.coefficient(2) == YPolynomial((1, 2, 1)) / 12
    assert s.coefficient(3) == YPolynomial.zero()
    assert s.coefficient(4) == YPolynomial((1, 4, 6, 4, 1)) / -720


def test_qy_at_minus_one_is_one_plus_alpha():
    coeffs = qy_series(8).specialize_y(-1)
    assert coeffs == (1, 1) + (0,) * 7


def test_qy_at_zero_is_todd():
    assert qy_series(8).specialize_y(0) == todd_series(8).specialize_y(0)


def test_qy_at_one_is_alpha_over_tanh():
    x = sympy.symbols("x")
    expected = _sympy_series_coeffs(x / sympy.tanh(x), x, 10)
    assert list(qy_series(10).specialize_y(1)) == expected


def test_qy_general_y_matches_substitution():
    # q_y(a) comes from x/(1 - e^{-x}) by x = a(1+y), minus a*y
    x = sympy.symbols("x")
    for y0 in (2, -3, 5):
        base = _sympy_series_coeffs(x / (1 - sympy.exp(-x)), x, 6)
        expected = [c * (1 + y0) ** k for k, c in enumerate(base)]
        expected[1] -= y0
        assert list(qy_series(6).specialize_y(y0)) == expected


def test_normalization_flag_and_validation():
    assert todd_series(3).is_normalized
    with pytest.raises(ValueError):
        AlphaSeries(2, (YPolynomial.one(),))
    with pytest.raises(ValueError):
        todd_series(-1)


def test_mul_truncates_to_smaller_order():
    a, b = todd_series(6), todd_series(3)
    prod = a.mul(b)
    assert prod.order == 3
    # low-order product check: (1 + x/2 + x^2/12 + ...)^2 starts 1 + x + 5x^2/12
    assert prod.coefficient(0) == 1
    assert prod.coefficient(1) == 1
    assert prod.coefficient(2) == YPolynomial.constant(Fraction(5, 12))
