"""Residue calculus for genus polynomials at odd y.

Two reduction lanes: modulo 1 - y^2 (degree <= 1 canonical forms built
from signature and Euler characteristic) and modulo y - y^3 (degree <= 2
canonical forms that also see the Todd genus).  On top of those sits the
fiber-bundle defect check: chi_y is multiplicative for fibrations up to a
defect that is divisible by 4 at every odd y in the duality regime, by 8
when y = 3 mod 4 or when the mod-4 monodromy action is trivial, and at
y = 1 mod 4 the mod-8 question is equivalent to the signature defect
being divisible by 8.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .genus import ChiVector, chi_y_polynomial, specialize
from .ypoly import YPolynomial


def reduce_mod_1_minus_y2(p: YPolynomial) -> YPolynomial:
    """Fold y^2 = 1: exponents collapse to their parity."""
    out = [0, 0]
    for k, c in enumerate(p.coeffs):
        out[k % 2] += c
    return YPolynomial(out)


def reduce_mod_y_minus_y3(p: YPolynomial) -> YPolynomial:
    """Fold y^3 = y: exponents >= 3 collapse to parity-matching 1 or 2."""
    out = [0, 0, 0]
    for k, c in enumerate(p.coeffs):
        out[k if k < 3 else (1 if k % 2 else 2)] += c
    return YPolynomial(out)


def canonical_mod_1_minus_y2(signature: int, euler: int) -> YPolynomial:
    """(sig/2)(1+y) + (e/2)(1-y); needs sig = e mod 2."""
    if (signature - euler) % 2:
        raise ValueError("signature and Euler characteristic differ mod 2")
    return YPolynomial(((signature + euler) // 2, (signature - euler) // 2))


def canonical_mod_y_minus_y3(todd: int, euler: int, signature: int) -> YPolynomial:
    """t(1-y^2) + (e/2)(y^2-y) + (sig/2)(y^2+y); needs sig = e mod 2."""
    if (signature - euler) % 2:
        raise ValueError("signature and Euler characteristic differ mod 2")
    return YPolynomial(
        (todd, (signature - euler) // 2, (signature + euler) // 2 - todd)
    )


def canonical_for_chi(chi: ChiVector, modulus: str) -> YPolynomial:
    """Canonical residue of a chi-vector's genus polynomial."""
    s = specialize(chi)
    if modulus == "1-y2":
        return canonical_mod_1_minus_y2(s.signature, s.euler)
    if modulus == "y-y3":
        return canonical_mod_y_minus_y3(s.todd, s.euler, s.signature)
    raise ValueError(f"unknown modulus {modulus!r} (use '1-y2' or 'y-y3')")


def reduce_for_modulus(p: YPolynomial, modulus: str) -> YPolynomial:
    if modulus == "1-y2":
        return reduce_mod_1_minus_y2(p)
    if modulus == "y-y3":
        return reduce_mod_y_minus_y3(p)
    raise ValueError(f"unknown modulus {modulus!r} (use '1-y2' or 'y-y3')")


def defect(e: ChiVector, f: ChiVector, b: ChiVector) -> YPolynomial:
    """chi_y(E) - chi_y(F) * chi_y(B)."""
    return chi_y_polynomial(e) - chi_y_polynomial(f) * chi_y_polynomial(b)


def sigma_defect(e: ChiVector, f: ChiVector, b: ChiVector) -> int:
    return (
        specialize(e).signature
        - specialize(f).signature * specialize(b).signature
    )


def guaranteed_modulus(
    y: int, duality_mode: bool = True, monodromy_mod4_trivial: bool = False
) -> int:
    """Modulus the defect provably vanishes by at this odd y.

    Duality regime: 4 always, 8 at y = 3 mod 4, 8 at every odd y when the
    mod-4 monodromy assertion is set.  Without duality (mixed-Hodge data
    for singular or non-compact spaces) the ladder drops to 2 and 4, and
    the monodromy assertion does not apply.
    """
    if y % 2 == 0:
        raise ValueError(f"y must be odd, got {y}")
    if duality_mode:
        if monodromy_mod4_trivial or y % 4 == 3:
            return 8
        return 4
    return 4 if y % 4 == 3 else 2


@dataclass(frozen=True)
class CongruenceReport:
    """Outcome of the defect check at a single odd y."""

    y: int
    defect_value: int
    guaranteed_modulus: int
    holds: bool
    sigma_defect: int
    equivalence_checked: bool
    equivalence_holds: Optional[bool] = None

    @property
    def ok(self) -> bool:
        return self.holds and self.equivalence_holds is not False


def classify_and_check(
    defect_poly: YPolynomial,
    sigma_def: int,
    y: int,
    duality_mode: bool = True,
    monodromy_mod4_trivial: bool = False,
) -> CongruenceReport:
    """Evaluate the defect at odd y and test it against the modulus ladder.

    At y = 1 mod 4 the top modulus (8 with duality, else 4) is not
    guaranteed outright; instead the defect hits it exactly when the
    signature defect does, and that biconditional is what gets checked.
    """
    value = defect_poly(y)
    if not isinstance(value, int):
        raise ValueError("defect polynomial must be integral")
    modulus = guaranteed_modulus(y, duality_mode, monodromy_mod4_trivial)
    holds = value % modulus == 0
    eq_checked = y % 4 == 1
    eq_holds = None
    if eq_checked:
        top = 8 if duality_mode else 4
        eq_holds = (value % top == 0) == (sigma_def % top == 0)
    return CongruenceReport(
        y=y,
        defect_value=value,
        guaranteed_modulus=modulus,
        holds=holds,
        sigma_defect=sigma_def,
        equivalence_checked=eq_checked,
        equivalence_holds=eq_holds,
    )


def sweep_checks(
    defect_poly: YPolynomial,
    sigma_def: int,
    ys: Iterable[int],
    duality_mode: bool = True,
    monodromy_mod4_trivial: bool = False,
) -> list[CongruenceReport]:
    return [
        classify_and_check(defect_poly, sigma_def, y, duality_mode, monodromy_mod4_trivial)
        for y in ys
    ]


def odd_range(start: int, stop: int) -> list[int]:
    """Odd integers in [start, stop], ascending."""
    return [y for y in range(start, stop + 1) if y % 2]
