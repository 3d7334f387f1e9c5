"""Exact polynomials in the genus parameter y.

Coefficients are ints or Fractions, never floats.  All arithmetic is exact;
a coefficient that becomes an integer-valued Fraction is normalized back to
int so equality and rendering stay canonical.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


def _norm(c: Scalar) -> Scalar:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"exact coefficient required, got {type(c).__name__}")


class YPolynomial:
    """Dense polynomial in y, coefficients ascending by power."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("YPolynomial is immutable")

    @classmethod
    def zero(cls) -> "YPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "YPolynomial":
        return cls((1,))

    @classmethod
    def constant(cls, c: Scalar) -> "YPolynomial":
        return cls((c,))

    @classmethod
    def variable(cls) -> "YPolynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, c: Scalar, k: int) -> "YPolynomial":
        if k < 0:
            raise ValueError("power must be >= 0")
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Scalar:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    @property
    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, YPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == YPolynomial((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("YPolynomial", self.coeffs))

    def __add__(self, other) -> "YPolynomial":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return YPolynomial(
            self.coefficient(k) + other.coefficient(k) for k in range(n)
        )

    __radd__ = __add__

    def __neg__(self) -> "YPolynomial":
        return YPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "YPolynomial":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "YPolynomial":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "YPolynomial":
        if isinstance(other, (int, Fraction)):
            return YPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, YPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return YPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return YPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "YPolynomial":
        if not isinstance(other, (int, Fraction)) or other == 0:
            return NotImplemented
        return YPolynomial(Fraction(c) / other for c in self.coeffs)

    def __pow__(self, k: int) -> "YPolynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("power must be a nonnegative int")
        out = YPolynomial.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, value: Scalar) -> Scalar:
        """Evaluate exactly at an int or Fraction point (Horner)."""
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return _norm(acc if isinstance(acc, (int, Fraction)) else Fraction(acc))

    def divmod_by(self, divisor: "YPolynomial") -> tuple["YPolynomial", "YPolynomial"]:
        """Exact polynomial division with remainder over the rationals."""
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dcs = divisor.coeffs
        lead = Fraction(dcs[-1])
        q = [0] * max(0, len(rem) - len(dcs) + 1)
        for i in range(len(rem) - len(dcs), -1, -1):
            c = Fraction(rem[i + len(dcs) - 1]) / lead
            if c == 0:
                continue
            q[i] = c
            for j, d in enumerate(dcs):
                rem[i + j] -= c * d
        return YPolynomial(q), YPolynomial(rem)

    def is_divisible_by(self, divisor: "YPolynomial") -> bool:
        return not self.divmod_by(divisor)[1]

    def __str__(self) -> str:
        """Fixed human rendering: ascending powers, explicit signs.

        Examples: "0", "2 - 20*y + 2*y^2", "1 + y^3", "-y".
        """
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = -c if c < 0 else c
            if k == 0:
                term = str(mag)
            else:
                power = "y" if k == 1 else f"y^{k}"
                term = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(f"-{term}" if c < 0 else term)
            else:
                parts.append(f"- {term}" if c < 0 else f"+ {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"YPolynomial({list(self.coeffs)!r})"


def _as_poly(v):
    if isinstance(v, YPolynomial):
        return v
    if isinstance(v, (int, Fraction)):
        return YPolynomial((v,))
    return NotImplemented
