import pytest
from hypothesis import given, strategies as st

from cyclotome.gf import (
    ExtField,
    PrimeField,
    find_irreducible,
    is_irreducible,
    multiplicative_order_mod,
    primitive_element,
    primitive_nth_root,
    splitting_field,
)

PRIMES = [3, 5, 7, 11, 13, 19, 29, 37]


def test_small_examples():
    assert PrimeField(5).inv(2) == 3
    assert PrimeField(11).pow(5, 0) == 1
    assert PrimeField(19).mul(13, 3) == 1


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError, match="zero has no inverse"):
        PrimeField(7).inv(0)


@pytest.mark.parametrize("p", [1, 2, 4, 9, 15])
def test_rejects_non_odd_primes(p):
    with pytest.raises(ValueError):
        PrimeField(p)


@given(st.sampled_from(PRIMES), st.integers(1, 10**6))
def test_inverse_law(p, a):
    F = PrimeField(p)
    a = F(a)
    if a:
        assert F.mul(a, F.inv(a)) == 1


def test_find_irreducible_examples():
    assert find_irreducible(5, 1) == (0, 1)
    assert find_irreducible(5, 2) == (2, 0, 1)
    f = find_irreducible(11, 4)
    assert len(f) == 5 and f[-1] == 1 and is_irreducible(11, f)


def _brute_irreducible_quadratic(p, f):
    # a monic quadratic is irreducible iff it has no root
    return all((f[0] + f[1] * x + x * x) % p for x in range(p))


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_ben_or_matches_root_check_on_quadratics(p):
    for c0 in range(p):
        for c1 in range(p):
            f = (c0, c1, 1)
            assert is_irreducible(p, f) == _brute_irreducible_quadratic(p, f)


def test_ben_or_on_known_reducible_quartic():
    # (x^2 + 2)(x^2 + 3) = x^4 + 6 = x^4 + 1 over GF(5)
    assert not is_irreducible(5, (1, 0, 0, 0, 1))
    assert is_irreducible(5, (2, 0, 0, 0, 1))


def test_find_irreducible_deterministic():
    find_irreducible.cache_clear()
    a = find_irreducible(13, 3)
    find_irreducible.cache_clear()
    assert find_irreducible(13, 3) == a


@given(st.sampled_from([(5, 2), (11, 4), (19, 8), (3, 4)]), st.data())
def test_frobenius_additive(pm, data):
    p, m = pm
    F = ExtField(PrimeField(p), find_irreducible(p, m))
    a = F.from_index(data.draw(st.integers(0, p**m - 1)))
    b = F.from_index(data.draw(st.integers(0, p**m - 1)))
    assert F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p))


@given(st.sampled_from([(5, 2), (11, 2), (3, 3)]), st.data())
def test_ext_field_inverse(pm, data):
    p, m = pm
    F = ExtField(PrimeField(p), find_irreducible(p, m))
    a = F.from_index(data.draw(st.integers(1, p**m - 1)))
    assert F.mul(a, F.inv(a)) == F.one


@pytest.mark.parametrize("n,q", [(2, 5), (8, 5), (16, 5), (16, 11), (32, 19), (64, 13), (8, 3)])
def test_primitive_nth_root(n, q):
    F, xi = primitive_nth_root(n, q)
    assert F.pow(xi, n) == F.one
    assert F.pow(xi, n // 2) != F.one


def test_root_examples():
    F, xi = primitive_nth_root(2, 5)
    assert F.to_base(xi) == 4
    assert multiplicative_order_mod(11, 16) == 4
    assert splitting_field(16, 11).m == 4
    assert splitting_field(8, 5).m == 2


def test_primitive_element_generates():
    F = splitting_field(8, 5)
    g = primitive_element(F)
    seen = set()
    x = F.one
    for _ in range(24):
        seen.add(x)
        x = F.mul(x, g)
    assert len(seen) == 24
