"""Built-in self-checks: quick, deterministic, one line per suite.

Each suite exercises one layer against frozen expected values (no random
state, no file IO) so `selftest` can vouch for an installation in well
under a second.  A suite either returns a short detail string or raises,
and the runner turns that into (name, ok, detail) rows.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .congruence import (
    canonical_mod_1_minus_y2,
    canonical_mod_y_minus_y3,
    classify_and_check,
    defect,
    guaranteed_modulus,
    sigma_defect,
)
from .genus import (
    ChiVector,
    chi_vector_from_hodge,
    chi_y_polynomial,
    genus_from_chern,
    parity_parts,
    product_chi_vector,
    projective_space_fixture,
    specialize,
)
from .series import qy_series, todd_series
from .ypoly import YPolynomial
from .z2forms import (
    Z2BilinearSpace,
    Z2QuadraticForm,
    Z4QuadraticForm,
    arf,
    arf_gauss_oracle,
    brown_invariant,
    defect_arf_pipeline,
    diagonal_lattice,
    e8_lattice,
    hyperbolic_lattice,
    lattice_signature,
    morita_arf_check,
    sublagrangian_reduction,
    van_der_blij_check,
)

y = YPolynomial.variable()


def _poly_arithmetic() -> str:
    p = (1 - y) ** 2
    assert p == 1 - 2 * y + y**2
    quot, rem = (1 - y**4).divmod_by(1 - y**2)
    assert rem == YPolynomial.zero() and quot == 1 + y**2
    assert p(3) == 4
    return "ring ops and exact division"

def _todd_expansion() -> str:
    td = todd_series(6)
    expected = [
        Fraction(1),
        Fraction(1, 2),
        Fraction(1, 12),
        Fraction(0),
        Fraction(-1, 720),
        Fraction(0),
        Fraction(1, 30240),
    ]
    got = [td.coefficient(k).coefficient(0) for k in range(7)]
    assert got == expected
    q = qy_series(4)
    assert q.coefficient(1) == Fraction(1, 2) + Fraction(1, 2) * y - y
    return "coefficients through order 6"

def _k3_genus() -> str:
    chi = ChiVector(2, (2, -20, 2))
    assert chi_y_polynomial(chi) == 2 - 20 * y + 2 * y**2
    s = specialize(chi)
    assert (s.euler, s.todd, s.signature) == (24, 2, -16)
    even, odd = parity_parts(chi)
    assert s.signature + s.euler == 2 * even
    assert s.signature - s.euler == 2 * odd
    return "chi_y = 2 - 20*y + 2*y^2"

def _chern_route() -> str:
    for n in range(5):
        hodge, chern = projective_space_fixture(n)
        assert genus_from_chern(chern) == chi_y_polynomial(chi_vector_from_hodge(hodge))
    return "projective spaces through dim 4, both routes"

def _product_rule() -> str:
    k3 = ChiVector(2, (2, -20, 2))
    p1 = ChiVector(1, (1, -1))
    prod = product_chi_vector(k3, p1)
    assert chi_y_polynomial(prod) == chi_y_polynomial(k3) * chi_y_polynomial(p1)
    return "chi_y multiplicative on products"

def _canonical_reductions() -> str:
    assert canonical_mod_1_minus_y2(-16, 24) == 4 - 20 * y
    assert canonical_mod_y_minus_y3(2, 24, -16) == 2 - 20 * y + 2 * y**2
    return "canonical residues of the k3 data"

def _congruence_ladder() -> str:
    assert guaranteed_modulus(3) == 8
    assert guaranteed_modulus(5) == 4
    assert guaranteed_modulus(5, monodromy_mod4_trivial=True) == 8
    assert guaranteed_modulus(3, duality_mode=False) == 4
    assert guaranteed_modulus(5, duality_mode=False) == 2
    return "moduli 8/4/2 by residue and mode"

def _bundle_defect() -> str:
    e = ChiVector(2, (2, 0, 2))
    f = ChiVector(1, (1, -1))
    b = ChiVector(1, (1, -1))
    d = defect(e, f, b)
    sd = sigma_defect(e, f, b)
    assert d == 1 + 2 * y + y**2 and sd == 4
    report = classify_and_check(d, sd, 3)
    assert report.holds and report.guaranteed_modulus == 8 and report.defect_value == 16
    report5 = classify_and_check(d, sd, 5)
    assert report5.holds and report5.equivalence_holds
    return "defect (1+y)^2, mod 8 at y=3"

def _arf_hyperbolic() -> str:
    h = Z2BilinearSpace.from_matrix([[0, 1], [1, 0]])
    assert arf(Z2QuadraticForm(h, (0, 0))) == 0
    assert arf(Z2QuadraticForm(h, (1, 1))) == 1
    assert arf_gauss_oracle(Z2QuadraticForm(h, (1, 1))) == 1
    two = h.direct_sum(h)
    q = Z2QuadraticForm(two, (1, 1, 1, 1))
    assert arf(q) == 0 and arf_gauss_oracle(q) == 0
    return "hyperbolic planes, greedy = Gauss"

def _brown_frozen() -> str:
    one = Z2BilinearSpace.from_matrix([[1]])
    assert brown_invariant(Z4QuadraticForm(one, (1,))) == 1
    assert brown_invariant(Z4QuadraticForm(one, (3,))) == 7
    h = Z2BilinearSpace.from_matrix([[0, 1], [1, 0]])
    assert brown_invariant(Z4QuadraticForm(h, (0, 0))) == 0
    assert brown_invariant(Z4QuadraticForm(h, (2, 2))) == 4
    a = Z4QuadraticForm(one, (1,))
    b = Z4QuadraticForm(one, (3,))
    s = a.orthogonal_sum(b)
    assert brown_invariant(s) == 0
    return "generators, hyperbolics, additivity"

def _lattice_signatures() -> str:
    assert lattice_signature(e8_lattice()) == 8
    assert lattice_signature(e8_lattice(-1)) == -8
    assert lattice_signature(hyperbolic_lattice(3)) == 0
    assert lattice_signature(diagonal_lattice([1, 1, -1])) == 1
    return "E8 = 8, U^3 = 0"

def _van_der_blij() -> str:
    for lat in (diagonal_lattice([1] * 5), diagonal_lattice([1, 1, -1]), e8_lattice()):
        assert van_der_blij_check(lat)
    return "char self-pairing = signature mod 8"

def _morita() -> str:
    assert morita_arf_check(diagonal_lattice([1, 1, 1, 1])).arf == 1
    assert morita_arf_check(e8_lattice()).arf == 0
    assert morita_arf_check(hyperbolic_lattice(2)).arf == 0
    return "diag(1,1,1,1) -> 1, E8 -> 0"

def _reduction_descent() -> str:
    h2 = Z2BilinearSpace.from_matrix(
        [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
    )
    quad = Z2QuadraticForm(h2, (0, 0, 0, 0))
    red = sublagrangian_reduction(h2, [(1, 0, 0, 0)], enhancement=quad.value)
    assert red.space.dim == 2 and red.space.nonsingular
    assert arf(Z2QuadraticForm(red.space, red.enhancement_values)) == 0
    return "rank drops by two, Arf survives"

def _pipeline() -> str:
    res = defect_arf_pipeline(diagonal_lattice([1, 1, 1, 1]), hyperbolic_lattice(2))
    assert res.sigma_defect == 4 and res.arf == 1 and res.consistent
    res2 = defect_arf_pipeline(e8_lattice(), diagonal_lattice([1] * 8))
    assert res2.sigma_defect == 0 and res2.consistent
    return "4*Arf matches both worked defects"

def _catalog_crosschecks() -> str:
    from .models import builtin_catalog, generate_triple

    entries = builtin_catalog()
    by_name = {m.name: m for m in entries}
    for entry in entries:
        entry.validate()
    for name, a, b in (
        ("p1xp1", "p1", "p1"),
        ("p1xk3", "p1", "k3"),
        ("k3xk3", "k3", "k3"),
        ("ellipticxp2", "elliptic", "p2"),
    ):
        prod = chi_y_polynomial(by_name[name].chi)
        assert prod == chi_y_polynomial(by_name[a].chi) * chi_y_polynomial(by_name[b].chi)
    tr = generate_triple(by_name["p1"], by_name["p1"], t=1, seed=7)
    again = generate_triple(by_name["p1"], by_name["p1"], t=1, seed=7)
    assert tr.total.chi == again.total.chi == ChiVector(2, (2, 0, 2))
    assert tr.sigma_defect() == 4
    return f"{len(entries)} entries, products multiplicative, generator deterministic"

_SUITES: tuple[tuple[str, Callable[[], str]], ...] = (
    ("polynomials", _poly_arithmetic),
    ("todd-series", _todd_expansion),
    ("k3-genus", _k3_genus),
    ("chern-route", _chern_route),
    ("product-rule", _product_rule),
    ("canonical-reduction", _canonical_reductions),
    ("congruence-ladder", _congruence_ladder),
    ("bundle-defect", _bundle_defect),
    ("arf", _arf_hyperbolic),
    ("brown", _brown_frozen),
    ("lattice-signature", _lattice_signatures),
    ("van-der-blij", _van_der_blij),
    ("morita", _morita),
    ("sublagrangian-reduction", _reduction_descent),
    ("defect-pipeline", _pipeline),
    ("catalog", _catalog_crosschecks),
)


def run_selftests() -> list[tuple[str, bool, str]]:
    rows = []
    for name, fn in _SUITES:
        try:
            detail = fn()
            rows.append((name, True, detail))
        except Exception as exc:  # noqa: BLE001 - report, don't crash
            rows.append((name, False, f"{type(exc).__name__}: {exc}"))
    return rows
