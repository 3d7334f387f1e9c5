"""Multiplicative sequences of Chern monomials.

A characteristic power series q(a) with q(0) = 1 determines K-polynomials
K_j(c_1, ..., c_j): formally q is evaluated on the Chern roots and the
product over roots is re-expressed in the elementary symmetric functions,
which are the Chern classes.  Everything here is exact.

The pipeline is the classical one: take log(q) coefficient-wise, evaluate
on power sums of the roots (Newton's identities turn those into Chern
polynomials), then exponentiate the resulting graded series.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .series import AlphaSeries
from .ypoly import Scalar, YPolynomial

# A monomial in Chern classes is keyed by a descending partition tuple,
# e.g. c_2 * c_1^2 of weight 4 has key (2, 1, 1).  The empty tuple is the
# constant term.
Partition = tuple[int, ...]


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n as descending tuples, lexicographically sorted."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ((),)
    out: list[Partition] = []

    def rec(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            rec(remaining - part, part, prefix + (part,))

    rec(n, n, ())
    return tuple(sorted(out))


def _check_partition_key(key: Partition):
    if not all(isinstance(p, int) and p >= 1 for p in key):
        raise ValueError(f"partition parts must be positive ints: {key!r}")
    if tuple(sorted(key, reverse=True)) != key:
        raise ValueError(f"partition key must be descending: {key!r}")


@dataclass(frozen=True, eq=True)
class GradedSeries:
    """Polynomial in c_1, c_2, ... truncated above a total weight.

    terms maps descending partitions to YPolynomial coefficients; zero
    coefficients and terms above the truncation weight are never stored.
    """

    truncation: int
    terms: dict[Partition, YPolynomial] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[Partition, YPolynomial] = {}
        for key, val in self.terms.items():
            _check_partition_key(key)
            if sum(key) > self.truncation:
                continue
            if not isinstance(val, YPolynomial):
                val = YPolynomial.constant(val)
            if val:
                clean[key] = val
        object.__setattr__(self, "terms", clean)

    @classmethod
    def one(cls, truncation: int) -> "GradedSeries":
        return cls(truncation, {(): YPolynomial.one()})

    def coefficient(self, key: Partition) -> YPolynomial:
        return self.terms.get(tuple(key), YPolynomial.zero())

    def homogeneous(self, weight: int) -> dict[Partition, YPolynomial]:
        return {k: v for k, v in self.terms.items() if sum(k) == weight}

    def add(self, other: "GradedSeries") -> "GradedSeries":
        if other.truncation != self.truncation:
            raise ValueError("truncation mismatch")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, YPolynomial.zero()) + v
        return GradedSeries(self.truncation, out)

    def scale(self, c: Scalar) -> "GradedSeries":
        return GradedSeries(
            self.truncation, {k: v * c for k, v in self.terms.items()}
        )

    def scale_poly(self, p: YPolynomial) -> "GradedSeries":
        return GradedSeries(
            self.truncation, {k: v * p for k, v in self.terms.items()}
        )

    def mul(self, other: "GradedSeries") -> "GradedSeries":
        if other.truncation != self.truncation:
            raise ValueError("truncation mismatch")
        out: dict[Partition, YPolynomial] = {}
        for k1, v1 in self.terms.items():
            w1 = sum(k1)
            for k2, v2 in other.terms.items():
                if w1 + sum(k2) > self.truncation:
                    continue
                key = tuple(sorted(k1 + k2, reverse=True))
                prod = v1 * v2
                out[key] = out.get(key, YPolynomial.zero()) + prod
        return GradedSeries(self.truncation, out)

    def exp(self) -> "GradedSeries":
        """exp of a series with no constant term."""
        if () in self.terms:
            raise ValueError("exp needs a series with zero constant term")
        acc = GradedSeries.one(self.truncation)
        power = GradedSeries.one(self.truncation)
        for j in range(1, self.truncation + 1):
            power = power.mul(self)
            if not power.terms:
                break
            acc = acc.add(power.scale(Fraction(1, factorial(j))))
        return acc


@lru_cache(maxsize=None)
def newton_power_sums(n: int) -> tuple[GradedSeries, ...]:
    """Power sums p_1..p_n of the roots as Chern polynomials.

    Newton's identities over the elementary symmetric functions e_j = c_j:
    p_k = sum_{i=1..k-1} (-1)^(i-1) e_i p_{k-i} + (-1)^(k-1) k e_k.
    """
    sums: list[GradedSeries] = []
    for k in range(1, n + 1):
        acc = GradedSeries(n, {(k,): YPolynomial.constant((-1) ** (k - 1) * k)})
        for i in range(1, k):
            e_i = GradedSeries(n, {(i,): YPolynomial.constant((-1) ** (i - 1))})
            acc = acc.add(e_i.mul(sums[k - i - 1]))
        sums.append(acc)
    return tuple(sums)


def _series_log(q: AlphaSeries, n: int) -> list[YPolynomial]:
    """Coefficients l_1..l_n of log q(a) for a normalized series."""
    u = [q.coefficient(k) for k in range(n + 1)]
    u[0] = YPolynomial.zero()  # u = q - 1
    out = [YPolynomial.zero()] * (n + 1)
    power = [YPolynomial.one()] + [YPolynomial.zero()] * n
    for m in range(1, n + 1):
        nxt = [YPolynomial.zero()] * (n + 1)
        for i in range(n + 1):
            if not power[i]:
                continue
            for j in range(1, n + 1 - i):
                nxt[i + j] = nxt[i + j] + power[i] * u[j]
        power = nxt
        sign = Fraction((-1) ** (m + 1), m)
        for k in range(n + 1):
            out[k] = out[k] + power[k] * sign
    return out[1:]


def multiplicative_sequence(q: AlphaSeries, n: int) -> GradedSeries:
    """K-polynomials K_0..K_n of the series q, as one graded series.

    The weight-j part is K_j(c_1, ..., c_j).  For q = 1 + a this returns
    the total Chern class itself (K_j = c_j), a useful identity check.
    """
    if not q.is_normalized:
        raise ValueError("characteristic series must start with 1")
    if q.order < n:
        raise ValueError(f"series order {q.order} too small for weight {n}")
    if n == 0:
        return GradedSeries.one(0)
    logs = _series_log(q, n)
    power = newton_power_sums(n)
    acc = GradedSeries(n)
    for m in range(1, n + 1):
        if logs[m - 1]:
            acc = acc.add(power[m - 1].scale_poly(logs[m - 1]))
    return acc.exp()
