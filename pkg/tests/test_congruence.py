import pytest
from hypothesis import given
from hypothesis import strategies as st

from genuslab.congruence import (
    canonical_mod_1_minus_y2,
    canonical_mod_y_minus_y3,
    canonical_for_chi,
    classify_and_check,
    defect,
    guaranteed_modulus,
    odd_range,
    reduce_for_modulus,
    reduce_mod_1_minus_y2,
    reduce_mod_y_minus_y3,
    sigma_defect,
    sweep_checks,
)
from genuslab.genus import ChiVector
from genuslab.ypoly import YPolynomial

K3 = ChiVector(2, (2, -20, 2))
P1 = ChiVector(1, (1, -1))
P2 = ChiVector(2, (1, -1, 1))
E_BUNDLE = ChiVector(2, (2, 0, 2))  # total space with signature defect 4 over P1 x P1


def test_reduce_mod_1_minus_y2_folds_parity():
    assert reduce_mod_1_minus_y2(YPolynomial((2, -20, 2))) == YPolynomial((4, -20))
    assert reduce_mod_1_minus_y2(YPolynomial((0, 0, 0, 1))) == YPolynomial((0, 1))
    assert reduce_mod_1_minus_y2(YPolynomial(())) == YPolynomial(())


def test_reduce_mod_y_minus_y3_folds_to_degree_two():
    assert reduce_mod_y_minus_y3(YPolynomial((0, 0, 0, 1))) == YPolynomial((0, 1))
    assert reduce_mod_y_minus_y3(YPolynomial((0, 0, 0, 0, 1))) == YPolynomial((0, 0, 1))
    assert reduce_mod_y_minus_y3(YPolynomial((1, 1, 1))) == YPolynomial((1, 1, 1))


def test_k3_canonical_form():
    assert canonical_mod_1_minus_y2(-16, 24) == YPolynomial((4, -20))
    assert str(canonical_mod_1_minus_y2(-16, 24)) == "4 - 20*y"


def test_canonical_matches_reduction_on_examples():
    for chi in (K3, P1, P2, E_BUNDLE, ChiVector(0, (1,))):
        poly = YPolynomial(chi.values)
        assert canonical_for_chi(chi, "1-y2") == reduce_mod_1_minus_y2(poly)
        assert canonical_for_chi(chi, "y-y3") == reduce_mod_y_minus_y3(poly)


def test_parity_violation_raises():
    with pytest.raises(ValueError):
        canonical_mod_1_minus_y2(1, 2)
    with pytest.raises(ValueError):
        canonical_mod_y_minus_y3(1, 2, 1)
    with pytest.raises(ValueError):
        reduce_for_modulus(YPolynomial((1,)), "y^2-1")


def test_difference_is_exactly_divisible():
    for chi in (K3, P2, E_BUNDLE):
        poly = YPolynomial(chi.values)
        diff = poly - canonical_for_chi(chi, "1-y2")
        assert diff.is_divisible_by(YPolynomial((1, 0, -1)))
        diff3 = poly - canonical_for_chi(chi, "y-y3")
        assert diff3.is_divisible_by(YPolynomial((0, 1, 0, -1)))


small_int_polys = st.builds(
    YPolynomial, st.lists(st.integers(min_value=-30, max_value=30), max_size=7)
)


@given(small_int_polys, st.integers(min_value=-25, max_value=25))
def test_reductions_preserve_value_mod_ideal(p, y):
    assert (p(y) - reduce_mod_1_minus_y2(p)(y)) % (y * y - 1 or 1) == 0
    assert (p(y) - reduce_mod_y_minus_y3(p)(y)) % (y - y**3 or 1) == 0


def test_bundle_defect_example():
    d = defect(E_BUNDLE, P1, P1)
    assert d == YPolynomial((1, 2, 1))
    assert sigma_defect(E_BUNDLE, P1, P1) == 4


@pytest.mark.parametrize(
    "y,duality,monodromy,expected",
    [
        (3, True, False, 8),
        (1, True, False, 4),
        (-5, True, False, 8),
        (-3, True, False, 4),
        (5, True, True, 8),
        (3, False, False, 4),
        (1, False, False, 2),
        (-5, False, False, 4),
    ],
)
def test_guaranteed_modulus_table(y, duality, monodromy, expected):
    assert guaranteed_modulus(y, duality, monodromy) == expected


def test_guaranteed_modulus_rejects_even_y():
    with pytest.raises(ValueError):
        guaranteed_modulus(4)


def test_classify_worked_example():
    d = defect(E_BUNDLE, P1, P1)
    at3 = classify_and_check(d, 4, 3)
    assert (at3.defect_value, at3.guaranteed_modulus, at3.holds) == (16, 8, True)
    assert not at3.equivalence_checked
    at5 = classify_and_check(d, 4, 5)
    assert (at5.defect_value, at5.guaranteed_modulus, at5.holds) == (36, 4, True)
    # 36 = 4 mod 8 and the signature defect 4 is also nonzero mod 8: equivalent
    assert at5.equivalence_checked and at5.equivalence_holds
    assert at5.ok


def test_monodromy_assertion_can_fail():
    d = defect(E_BUNDLE, P1, P1)
    report = classify_and_check(d, 4, 5, monodromy_mod4_trivial=True)
    assert report.guaranteed_modulus == 8
    assert not report.holds
    assert not report.ok


def test_sweep_covers_all_odd_values():
    ys = odd_range(-99, 99)
    assert len(ys) == 100
    assert all(y % 2 for y in ys)
    reports = sweep_checks(defect(E_BUNDLE, P1, P1), 4, ys)
    assert len(reports) == 100
    assert all(r.holds for r in reports)
