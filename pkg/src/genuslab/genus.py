"""Hirzebruch genus of a compact complex n-fold, from Hodge or Chern data.

The central object is the chi-vector (chi^0, ..., chi^n) with
chi^p = sum_q (-1)^q h^{p,q}; its generating polynomial in y specializes
to the Euler characteristic at y = -1, the Todd genus at y = 0, and the
signature at y = 1.  The Chern route evaluates the K-polynomial of the
q_y characteristic series against Chern numbers and must agree.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import NamedTuple

from .msequence import Partition, multiplicative_sequence, partitions
from .series import qy_series
from .ypoly import YPolynomial


@dataclass(frozen=True)
class ChiVector:
    """Alternating column sums of the Hodge diamond, indexed p = 0..n."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("dimension must be >= 0")
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != self.n + 1:
            raise ValueError(f"need {self.n + 1} values, got {len(self.values)}")
        if not all(isinstance(v, int) for v in self.values):
            raise ValueError("chi-vector entries must be ints")


@dataclass(frozen=True)
class HodgeDiamond:
    """Hodge numbers h^{p,q} as an (n+1) x (n+1) matrix, rows indexed by p."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        if self.n < 0:
            raise ValueError("dimension must be >= 0")
        if len(self.rows) != self.n + 1 or any(
            len(r) != self.n + 1 for r in self.rows
        ):
            raise ValueError(f"hodge matrix must be {self.n + 1} square")
        for r in self.rows:
            for v in r:
                if not isinstance(v, int) or v < 0:
                    raise ValueError("hodge numbers must be nonnegative ints")

    def h(self, p: int, q: int) -> int:
        return self.rows[p][q]


@dataclass(frozen=True)
class ChernData:
    """Complete Chern numbers of an n-fold, keyed by partitions of n."""

    n: int
    numbers: dict[Partition, int]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("dimension must be >= 0")
        fixed = {tuple(k): v for k, v in self.numbers.items()}
        object.__setattr__(self, "numbers", fixed)
        expected = set(partitions(self.n)) if self.n > 0 else set()
        if set(fixed) != expected:
            raise ValueError(
                f"chern numbers must cover exactly the partitions of {self.n}"
            )
        if not all(isinstance(v, int) for v in fixed.values()):
            raise ValueError("chern numbers must be ints")


class Specializations(NamedTuple):
    euler: int
    todd: int
    signature: int


def chi_vector_from_hodge(hd: HodgeDiamond) -> ChiVector:
    values = tuple(
        sum((-1) ** q * hd.h(p, q) for q in range(hd.n + 1)) for p in range(hd.n + 1)
    )
    return ChiVector(hd.n, values)


def chi_y_polynomial(chi: ChiVector) -> YPolynomial:
    return YPolynomial(chi.values)


def specialize(chi: ChiVector) -> Specializations:
    """Exact evaluations at y = -1, 0, 1."""
    p = chi_y_polynomial(chi)
    return Specializations(euler=p(-1), todd=p(0), signature=p(1))


def check_duality(chi: ChiVector) -> bool:
    """chi^p == (-1)^n chi^{n-p} for all p (Serre symmetry of the vector)."""
    sign = (-1) ** chi.n
    return all(
        chi.values[p] == sign * chi.values[chi.n - p] for p in range(chi.n + 1)
    )


def parity_parts(chi: ChiVector) -> tuple[int, int]:
    """(even-index sum, odd-index sum); identically sig + e = 2*even etc."""
    even = sum(v for p, v in enumerate(chi.values) if p % 2 == 0)
    odd = sum(v for p, v in enumerate(chi.values) if p % 2 == 1)
    return even, odd


def genus_from_chern(cd: ChernData) -> YPolynomial:
    """Evaluate the weight-n K-polynomial of q_y against the Chern numbers.

    Raises if the result is not an integer polynomial: that means the
    numbers cannot come from an actual n-fold.
    """
    if cd.n == 0:
        return YPolynomial.one()
    k_poly = multiplicative_sequence(qy_series(cd.n), cd.n).homogeneous(cd.n)
    acc = YPolynomial.zero()
    for key, coeff in k_poly.items():
        acc = acc + coeff * cd.numbers[key]
    if not acc.is_integral:
        raise ValueError(f"chern numbers give a non-integral genus: {acc}")
    return acc


def product_chi_vector(a: ChiVector, b: ChiVector) -> ChiVector:
    """Chi-vector of a product: the convolution of the factors."""
    n = a.n + b.n
    values = [0] * (n + 1)
    for p, va in enumerate(a.values):
        for q, vb in enumerate(b.values):
            values[p + q] += va * vb
    return ChiVector(n, tuple(values))


def product_hodge(a: HodgeDiamond, b: HodgeDiamond) -> HodgeDiamond:
    """Hodge numbers of a product (Kuenneth)."""
    n = a.n + b.n
    rows = [[0] * (n + 1) for _ in range(n + 1)]
    for pa in range(a.n + 1):
        for qa in range(a.n + 1):
            if a.h(pa, qa) == 0:
                continue
            for pb in range(b.n + 1):
                for qb in range(b.n + 1):
                    rows[pa + pb][qa + qb] += a.h(pa, qa) * b.h(pb, qb)
    return HodgeDiamond(n, tuple(tuple(r) for r in rows))


def product_chern(a: ChernData, b: ChernData) -> ChernData:
    """Chern numbers of a product from those of the factors.

    c(X x Y) = c(X) c(Y), so each part i of a partition of n splits as
    i = s + (i - s) across the factors; a split contributes only when its
    X-parts sum to dim X, since everything else integrates to zero.
    """
    n = a.n + b.n
    numbers: dict[Partition, int] = {}
    for key in partitions(n) if n > 0 else ():
        total = 0
        for splits in _part_splits(key, a.n):
            a_key = tuple(sorted((s for s, _ in splits if s > 0), reverse=True))
            b_key = tuple(sorted((t for _, t in splits if t > 0), reverse=True))
            total += _chern_value(a, a_key) * _chern_value(b, b_key)
        numbers[key] = total
    return ChernData(n, numbers)


def _chern_value(cd: ChernData, key: Partition) -> int:
    if not key:
        return 1 if cd.n == 0 else 0
    return cd.numbers[key] if sum(key) == cd.n else 0


def _part_splits(key: Partition, target: int):
    """All ways to split each part i as (s, i-s) with the s-sums hitting target."""
    out: list[list[tuple[int, int]]] = []

    def rec(idx: int, remaining: int, acc: list[tuple[int, int]]):
        if idx == len(key):
            if remaining == 0:
                out.append(list(acc))
            return
        part = key[idx]
        for s in range(min(part, remaining), -1, -1):
            acc.append((s, part - s))
            rec(idx + 1, remaining - s, acc)
            acc.pop()

    rec(0, target, [])
    return out


def projective_space_fixture(n: int) -> tuple[HodgeDiamond, ChernData]:
    """Hodge and Chern data of complex projective n-space.

    Hodge numbers are 1 on the diagonal; the Chern number of a partition
    (i_1, ..., i_k) is the product of binomial(n+1, i_j).
    """
    if n < 0:
        raise ValueError("dimension must be >= 0")
    rows = tuple(
        tuple(1 if p == q else 0 for q in range(n + 1)) for p in range(n + 1)
    )
    numbers = {
        key: _prod(comb(n + 1, i) for i in key) for key in (partitions(n) if n else ())
    }
    return HodgeDiamond(n, rows), ChernData(n, numbers)


def _prod(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out
