import pytest
from hypothesis import given
from hypothesis import strategies as st

from genuslab.genus import (
    ChernData,
    ChiVector,
    HodgeDiamond,
    check_duality,
    chi_vector_from_hodge,
    chi_y_polynomial,
    genus_from_chern,
    parity_parts,
    product_chern,
    product_chi_vector,
    product_hodge,
    projective_space_fixture,
    specialize,
)
from genuslab.ypoly import YPolynomial

K3_HODGE = HodgeDiamond(2, ((1, 0, 1), (0, 20, 0), (1, 0, 1)))
K3_CHERN = ChernData(2, {(2,): 24, (1, 1): 0})


def test_projective_space_chi_vectors():
    for n in range(5):
        hodge, _ = projective_space_fixture(n)
        chi = chi_vector_from_hodge(hodge)
        assert chi.values == tuple((-1) ** p for p in range(n + 1))
        assert check_duality(chi)


def test_k3_chi_vector_and_specializations():
    chi = chi_vector_from_hodge(K3_HODGE)
    assert chi.values == (2, -20, 2)
    assert str(chi_y_polynomial(chi)) == "2 - 20*y + 2*y^2"
    s = specialize(chi)
    assert (s.euler, s.todd, s.signature) == (24, 2, -16)


def test_projective_space_specializations():
    # chi = n+1, todd = 1, signature alternates 1, 0 with parity of n
    for n in range(6):
        chi = chi_vector_from_hodge(projective_space_fixture(n)[0])
        s = specialize(chi)
        assert (s.euler, s.todd, s.signature) == (n + 1, 1, 1 - n % 2)


def test_duality_detects_violations():
    assert not check_duality(ChiVector(2, (1, 0, 2)))
    assert check_duality(ChiVector(3, (1, -5, 5, -1)))
    assert not check_duality(ChiVector(3, (1, -5, 5, 1)))


@given(st.lists(st.integers(min_value=-40, max_value=40), min_size=1, max_size=9))
def test_parity_identities(values):
    chi = ChiVector(len(values) - 1, tuple(values))
    even, odd = parity_parts(chi)
    s = specialize(chi)
    assert s.signature + s.euler == 2 * even
    assert s.signature - s.euler == 2 * odd


@pytest.mark.parametrize("n", range(5))
def test_projective_space_dual_route(n):
    hodge, chern = projective_space_fixture(n)
    via_hodge = chi_y_polynomial(chi_vector_from_hodge(hodge))
    assert genus_from_chern(chern) == via_hodge


def test_k3_dual_route():
    assert genus_from_chern(K3_CHERN) == YPolynomial((2, -20, 2))


def test_chern_route_rejects_non_integral():
    with pytest.raises(ValueError, match="non-integral"):
        genus_from_chern(ChernData(2, {(2,): 25, (1, 1): 0}))


def test_chern_data_requires_complete_partitions():
    with pytest.raises(ValueError):
        ChernData(2, {(2,): 24})
    with pytest.raises(ValueError):
        ChernData(2, {(2,): 24, (1, 1): 0, (1,): 5})


def test_product_chi_vector_is_convolution():
    p1 = ChiVector(1, (1, -1))
    sq = product_chi_vector(p1, p1)
    assert sq.values == (1, -2, 1)
    assert chi_y_polynomial(sq) == chi_y_polynomial(p1) * chi_y_polynomial(p1)


def test_product_hodge_kuenneth():
    p1 = projective_space_fixture(1)[0]
    sq = product_hodge(p1, p1)
    assert sq.h(1, 1) == 2
    assert sq.h(0, 0) == sq.h(2, 2) == 1
    assert chi_vector_from_hodge(sq).values == (1, -2, 1)


P1_CHERN = ChernData(1, {(1,): 2})
P2_CHERN = projective_space_fixture(2)[1]


def test_product_chern_frozen_examples():
    sq = product_chern(P1_CHERN, P1_CHERN)
    assert sq.numbers == {(2,): 4, (1, 1): 8}
    tri = product_chern(P1_CHERN, P2_CHERN)
    assert tri.numbers == {(3,): 6, (2, 1): 24, (1, 1, 1): 54}


def test_product_chern_genus_is_multiplicative():
    cases = [
        (P1_CHERN, P1_CHERN),
        (P1_CHERN, P2_CHERN),
        (P2_CHERN, P2_CHERN),
        (P1_CHERN, K3_CHERN),
        (P2_CHERN, K3_CHERN),
    ]
    for a, b in cases:
        assert genus_from_chern(product_chern(a, b)) == genus_from_chern(
            a
        ) * genus_from_chern(b)


def test_point_has_unit_genus():
    assert genus_from_chern(ChernData(0, {})) == YPolynomial.one()


def test_hodge_validation():
    with pytest.raises(ValueError):
        HodgeDiamond(1, ((1, 0),))
    with pytest.raises(ValueError):
        HodgeDiamond(1, ((1, -1), (0, 1)))
