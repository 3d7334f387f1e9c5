"""Truncated one-variable characteristic power series.

An AlphaSeries stores coefficients of a formal variable a up to a fixed
order; each coefficient is an exact YPolynomial in y, so a single series
carries the whole y-family at once.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .ypoly import Scalar, YPolynomial


@dataclass(frozen=True)
class AlphaSeries:
    """Coefficients c[0..order] of a truncated power series in a."""

    order: int
    coeffs: tuple[YPolynomial, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be >= 0")
        if len(self.coeffs) != self.order + 1:
            raise ValueError("need exactly order+1 coefficients")

    @property
    def is_normalized(self) -> bool:
        return self.coeffs[0] == YPolynomial.one()

    def coefficient(self, k: int) -> YPolynomial:
        return self.coeffs[k]

    def mul(self, other: "AlphaSeries") -> "AlphaSeries":
        """Product truncated at the smaller order."""
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            s = YPolynomial.zero()
            for i in range(k + 1):
                s = s + self.coeffs[i] * other.coeffs[k - i]
            out.append(s)
        return AlphaSeries(n, tuple(out))

    def specialize_y(self, value: Scalar) -> tuple[Scalar, ...]:
        """Evaluate every coefficient at a fixed y, exactly."""
        return tuple(c(value) for c in self.coeffs)


@lru_cache(maxsize=None)
def _todd_coeffs(order: int) -> tuple[Fraction, ...]:
    # t solves (1 - e^{-x}) * sum t_k x^k = x.  With e_m = (-1)^(m+1)/m!
    # the coefficient of x^(k+1) gives sum_{m=1..k+1} e_m t_{k+1-m} = [k == 0].
    t = [Fraction(1)]
    fact = [Fraction(1)]
    for m in range(1, order + 2):
        fact.append(fact[-1] * m)
    for k in range(1, order + 1):
        acc = Fraction(0)
        for m in range(2, k + 2):
            e_m = Fraction((-1) ** (m + 1), int(fact[m]))
            acc += e_m * t[k + 1 - m]
        t.append(-acc)  # e_1 = 1
    return tuple(t)


def todd_series(order: int) -> AlphaSeries:
    """Series x/(1 - e^{-x}) up to the given order: 1, 1/2, 1/12, 0, -1/720, ..."""
    if order < 0:
        raise ValueError("order must be >= 0")
    return AlphaSeries(
        order, tuple(YPolynomial.constant(c) for c in _todd_coeffs(order))
    )


def qy_series(order: int) -> AlphaSeries:
    """Series a(1+y)/(1 - e^{-a(1+y)}) - a*y up to the given order.

    Substituting x = a(1+y) into the Todd expansion scales the k-th Todd
    coefficient by (1+y)^k; the linear term additionally absorbs -y.
    At y = -1 this collapses to 1 + a, at y = 0 to the Todd series, and at
    y = 1 to the expansion of a/tanh(a).
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    one_plus_y = YPolynomial((1, 1))
    t = _todd_coeffs(order)
    coeffs = [YPolynomial.constant(t[k]) * one_plus_y**k for k in range(order + 1)]
    if order >= 1:
        coeffs[1] = coeffs[1] - YPolynomial.variable()
    return AlphaSeries(order, tuple(coeffs))
