import pytest

from cyclotome.cosets import coset_map
from cyclotome.factor import check_irreducible, factor_with_root, factor_xn_minus_1, minimal_polynomial
from cyclotome.gf import PrimeField, primitive_nth_root
from cyclotome.poly import Polynomial

QS = [5, 11, 13, 19, 29, 37]


def texts(fac):
    return [str(f) for f in fac.multiset()]


def test_reference_factor_lists():
    assert texts(factor_xn_minus_1(8, 5)) == ["x + 1", "x + 2", "x + 3", "x + 4", "x^2 + 2", "x^2 + 3"]
    assert texts(factor_xn_minus_1(16, 11)) == [
        "x + 1", "x + 10", "x^2 + 1", "x^2 + 3x + 10", "x^2 + 8x + 10",
        "x^4 + 3x^2 + 10", "x^4 + 8x^2 + 10",
    ]
    assert texts(factor_xn_minus_1(2, 5)) == ["x + 1", "x + 4"]


def test_individual_minimal_polynomials():
    F, xi = primitive_nth_root(8, 5)
    cmap = coset_map(8, 5)
    assert str(minimal_polynomial(cmap[0], F, xi)) == "x + 4"
    assert str(minimal_polynomial(cmap[4], F, xi)) == "x + 1"
    assert str(minimal_polynomial(cmap[1], F, xi)) in {"x^2 + 2", "x^2 + 3"}


@pytest.mark.parametrize("q", QS)
@pytest.mark.parametrize("e", range(1, 7))
def test_product_degree_irreducibility(e, q):
    n = 2**e
    fac = factor_xn_minus_1(n, q)
    assert fac.product() == Polynomial.x_n_minus_1(PrimeField(q), n)
    cmap = coset_map(n, q)
    for a, f in fac.factors.items():
        assert f.degree == len(cmap[a])
        assert f.is_monic() and check_irreducible(f)


@pytest.mark.parametrize("n,q", [(8, 5), (16, 5), (16, 11), (32, 19), (64, 13)])
def test_root_choice_does_not_change_multiset(n, q):
    F, xi = primitive_nth_root(n, q)
    other = F.pow(xi, 3)  # still a primitive n-th root since gcd(3, n) = 1
    a = factor_with_root(n, q, F, xi)
    b = factor_with_root(n, q, F, other)
    assert a.multiset() == b.multiset()


def test_leader_lookup():
    fac = factor_xn_minus_1(8, 5)
    assert fac.leader_for(Polynomial.parse(PrimeField(5), "x + 4")) == 0
    with pytest.raises(KeyError):
        fac.leader_for(Polynomial.parse(PrimeField(5), "x^2 + 1"))


def test_rejects_bad_length():
    with pytest.raises(ValueError):
        factor_xn_minus_1(12, 5)
