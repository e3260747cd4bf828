import pytest

from cyclotome.cosets import coset_leaders, negate_set
from cyclotome.cyclotomy import (
    EXHAUSTIVE_CAP,
    attainable_hull_dims,
    check_family,
    class_polynomial,
    closed_form_hull_count,
    construction_count,
    count_all_cyclic,
    count_half_dim,
    count_lcd,
    count_report,
    enumerate_construction,
    enumerate_half_dim_codes,
    exhaustive_count_all,
    exhaustive_count_half_dim,
    hull_spectrum,
    one_dim_hull_characterization,
    closed_form_hull_dims,
    representative_q,
    u_classes,
    w_classes,
)
from cyclotome.factor import factor_xn_minus_1
from cyclotome.gf import PrimeField
from cyclotome.poly import Polynomial

A_QS = [5, 13, 17, 29, 37, 41]
B_QS = [11, 19, 43, 59]


def test_class_examples():
    assert w_classes(3).class0 == {1, 5} and w_classes(3).class1 == {3, 7}
    assert w_classes(4).class0 == {1, 5, 9, 13} and w_classes(4).class1 == {3, 7, 11, 15}
    assert u_classes(4).class0 == {1, 3, 9, 11} and u_classes(4).class1 == {5, 7, 13, 15}
    assert u_classes(3).class0 == {1, 3} and u_classes(3).class1 == {5, 7}


@pytest.mark.parametrize("e", range(3, 9))
def test_class_laws(e):
    n = 2**e
    units = set(range(1, n, 2))
    for cls, qs in ((w_classes(e), A_QS), (u_classes(e), B_QS)):
        assert not cls.class0 & cls.class1
        assert cls.class0 | cls.class1 == units
        assert negate_set(cls.class1, n) == cls.class0
        assert len(cls.class0) == 2 ** (e - 2)
        assert all(cls.is_stable_under(q) for q in qs)


def test_class_polynomials():
    assert {str(class_polynomial(w_classes(3), j, 5)) for j in (0, 1)} == {"x^2 + 2", "x^2 + 3"}
    assert {str(class_polynomial(u_classes(4), j, 11)) for j in (0, 1)} == {"x^4 + 3x^2 + 10", "x^4 + 8x^2 + 10"}
    with pytest.raises(ArithmeticError):
        class_polynomial(w_classes(4), 0, 11)


@pytest.mark.parametrize("cls,e,q", [("W", 3, 5), ("W", 4, 13), ("W", 5, 5), ("U", 4, 11), ("U", 5, 19)])
def test_class_product_is_odd_root_factor(cls, e, q):
    classes = w_classes(e) if cls == "W" else u_classes(e)
    n = 2**e
    fac = factor_xn_minus_1(n, q)
    odd = Polynomial.one(PrimeField(q))
    for a, f in fac.factors.items():
        if a % 2:
            odd = odd * f
    assert class_polynomial(classes, 0, q) * class_polynomial(classes, 1, q) == odd


CONSTRUCTIONS = [
    ("eq2", 3, 5), ("eq2", 4, 5), ("eq2", 5, 5), ("eq2", 6, 5), ("eq2", 4, 13), ("eq2", 6, 29),
    ("eq2", 4, 41), ("eq2", 5, 41), ("eq2", 5, 17),
    ("eq4", 3, 11), ("eq4", 4, 11), ("eq4", 5, 11), ("eq4", 6, 11), ("eq4", 5, 19), ("eq4", 6, 19),
    ("eq4", 4, 43),
]


@pytest.mark.parametrize("cons,e,q", CONSTRUCTIONS)
def test_construction_outputs(cons, e, q):
    n = 2**e
    codes = enumerate_construction(cons, e, q)
    s = check_family(cons, e, q)
    assert len(codes) == construction_count(cons, e, s)
    assert len({c.generator for c in codes}) == len(codes)
    xn1 = Polynomial.x_n_minus_1(PrimeField(q), n)
    for c in codes:
        assert c.generator.divides(xn1) and c.generator.degree == n // 2


@pytest.mark.parametrize("cons,e,q", [c for c in CONSTRUCTIONS if c[1] <= 5 and len(coset_leaders(2 ** c[1], c[2])) <= 20])
def test_construction_inside_half_rate_family(cons, e, q):
    every = {c.generator for c in enumerate_half_dim_codes(e, q)}
    assert {c.generator for c in enumerate_construction(cons, e, q)} <= every


def test_reference_construction_sizes():
    assert len(enumerate_construction("eq2", 3, 5, 2)) == 8
    assert len(enumerate_construction("eq2", 4, 5, 2)) == 16
    assert len(enumerate_construction("eq4", 4, 11, 3)) == 8
    assert len(enumerate_construction("eq4", 5, 19, 4)) == 16


def test_family_errors():
    with pytest.raises(ValueError, match="3 \\(mod 8\\)"):
        enumerate_construction("eq4", 4, 5)
    with pytest.raises(ValueError, match="1 \\(mod 4\\)"):
        enumerate_construction("eq2", 4, 11)
    with pytest.raises(ValueError):
        enumerate_construction("eq2", 4, 5, s=3)
    with pytest.raises(ValueError):
        enumerate_construction("eq9", 4, 5)


def test_count_examples():
    assert count_all_cyclic(3, 2, "A") == 64
    assert count_all_cyclic(4, 3, "B") == 128
    assert count_all_cyclic(4, 2, "A") == 2**8
    assert [count_half_dim(3, 2, "A"), count_half_dim(4, 2, "A")] == [14, 30]
    assert [count_half_dim(4, 3, "B"), count_half_dim(5, 4, "B")] == [14, 30]
    assert count_lcd(3, 2, "A") == 16 and count_lcd(4, 3, "B") == 32 and count_lcd(4, 2, "A") == 32
    assert closed_form_hull_count(3, 2, "A", 1) == 16
    assert closed_form_hull_count(4, 2, "A", 2) == 32
    assert closed_form_hull_count(4, 3, "B", 1) == 0
    assert closed_form_hull_count(4, 3, "B", 2) == 32


def test_count_parameter_checks():
    with pytest.raises(ValueError):
        count_all_cyclic(3, 3, "A")  # needs s < e
    with pytest.raises(ValueError):
        count_half_dim(4, 2, "B")
    with pytest.raises(ValueError):
        count_lcd(4, 2, "C")


def _fits(e, s, family):
    cosets = (e - s) * 2 ** (s - 1) + 2**s if family == "A" else 2 * e - 1
    return 2**cosets <= EXHAUSTIVE_CAP


DESK = [(e, s, "A") for e in range(3, 7) for s in range(2, e) if _fits(e, s, "A")]
DESK += [(e, 3, "B") for e in range(3, 8)]


def test_desk_scale_grid_is_not_trivial():
    assert len(DESK) >= 10


@pytest.mark.parametrize("e,s,family", DESK)
def test_closed_forms_equal_exhaustive(e, s, family):
    for name, closed, exh, status in count_report(e, s, family):
        if name == "attainable hull dims" and family == "B":
            assert status == "discrepancy" and set(exh) < set(closed)
        else:
            assert status == "ok", (name, closed, exh)


@pytest.mark.parametrize("e,q", [(3, 5), (4, 5), (4, 11), (5, 19), (5, 13)])
def test_counts_at_real_primes(e, q):
    n = 2**e
    from cyclotome.cosets import classify

    family, s = classify(q, e)
    assert exhaustive_count_all(n, q) == count_all_cyclic(e, s, family)
    assert exhaustive_count_half_dim(n, q) == count_half_dim(e, s, family)
    spectrum = hull_spectrum(n, q)
    assert spectrum[0] == count_lcd(e, s, family)
    assert spectrum[1] == closed_form_hull_count(e, s, family, 1)
    assert spectrum[2] == closed_form_hull_count(e, s, family, 2)


def test_representative_multiplier_matches_prime():
    assert hull_spectrum(16, representative_q(4, 2, "A")) == hull_spectrum(16, 5)
    assert hull_spectrum(16, representative_q(4, 3, "B")) == hull_spectrum(16, 11)


def test_attainable_sets():
    a = attainable_hull_dims(3, 2, "A", 5)
    assert a["exhaustive"] == a["closed_form"] == {0, 1, 2, 3} and a["equal"]
    b = attainable_hull_dims(4, 3, "B", 11)
    assert b["exhaustive"] == {0, 2, 4, 6}
    assert closed_form_hull_dims(4, 3, "B") == set(range(0, 15, 2))
    assert b["equal"] is False


def test_spectra():
    assert dict(hull_spectrum(16, 11)) == {0: 32, 2: 32, 4: 32, 6: 32}
    assert hull_spectrum(32, 19)[1] == 0


@pytest.mark.parametrize("n,q", [(8, 5), (16, 5), (16, 11), (16, 13)])
def test_one_dimensional_hull_characterization(n, q):
    r = one_dim_hull_characterization(n, q)
    assert r["agree"] and r["checked"] == exhaustive_count_all(n, q)


def test_half_dim_enumeration_sizes():
    assert len(enumerate_half_dim_codes(3, 5)) == 14
    assert len(enumerate_half_dim_codes(4, 11)) == 14
    assert len(enumerate_half_dim_codes(5, 19)) == 30
    assert all(c.dimension == 16 for c in enumerate_half_dim_codes(5, 19))
