import pytest
from hypothesis import given, strategies as st

from cyclotome.cosets import (
    classify,
    coset_leaders,
    coset_size_profile,
    cyclotomic_coset,
    euler_phi,
    expected_block_count,
    multiplicative_order,
    negate_set,
    raw_profile,
    symmetric_blocks,
    t_partition,
)

QS = [5, 11, 13, 19, 29, 37]


def sets(cosets):
    return [set(c.elements) for c in cosets]


def test_orders_and_phi():
    assert multiplicative_order(5, 8) == 2
    assert multiplicative_order(5, 16) == 4
    assert multiplicative_order(19, 32) == 8
    assert euler_phi(8) == 4 and euler_phi(1) == 1
    assert all(euler_phi(2**e) == 2 ** (e - 1) for e in range(1, 12))


def test_single_cosets():
    assert cyclotomic_coset(0, 16, 11).elements == (0,)
    assert cyclotomic_coset(1, 16, 11).elements == (1, 3, 9, 11)
    assert cyclotomic_coset(2, 8, 5).elements == (2,)


def test_coset_lists():
    assert sets(coset_leaders(8, 5)) == [{0}, {1, 5}, {2}, {3, 7}, {4}, {6}]
    assert len(coset_leaders(16, 11)) == 7
    assert sets(coset_leaders(2, 7)) == [{0}, {1}]
    with pytest.raises(ValueError):
        coset_leaders(8, 4)


def test_t_partition_small():
    part = t_partition(3)
    assert part.levels == ((1, 3, 5, 7), (2, 6), (4,), (0,))
    assert [len(x) for x in t_partition(4).levels] == [8, 4, 2, 1, 1]


@pytest.mark.parametrize("e", range(1, 9))
def test_t_partition_laws(e):
    part = t_partition(e)
    flat = [x for lvl in part.levels for x in lvl]
    assert sorted(flat) == list(range(2**e))
    for i, lvl in enumerate(part.levels):
        assert negate_set(lvl, 2**e) == set(lvl)
        assert all(part.level_of(x) == i for x in lvl)


@pytest.mark.parametrize("q", QS + [3, 7, 17])
@pytest.mark.parametrize("e", range(1, 7))
def test_partition_and_level_closure(e, q):
    n = 2**e
    cs = coset_leaders(n, q)
    assert sum(len(c) for c in cs) == n
    assert sorted(x for c in cs for x in c.elements) == list(range(n))
    part = t_partition(e)
    for c in cs:
        assert {q * x % n for x in c.elements} == set(c.elements)
        assert len({part.level_of(x) for x in c.elements}) == 1


def test_profiles():
    assert coset_size_profile(3, 5) == {0: (2, 2), 1: (1, 2), 2: (1, 1), 3: (1, 1)}
    assert coset_size_profile(4, 11) == {0: (4, 2), 1: (2, 2), 2: (2, 1), 3: (1, 1), 4: (1, 1)}
    assert coset_size_profile(5, 19)[0] == (8, 2)


# the q = 3 (mod 8) profile starts at e = 3
PROFILE_CASES = [(e, q) for q in QS for e in range(1, 7) if q % 8 != 3 or e >= 3]


@pytest.mark.parametrize("e,q", PROFILE_CASES)
def test_profile_closed_form_matches_raw(e, q):
    assert coset_size_profile(e, q) == raw_profile(e, q)


def test_family_b_profile_needs_e_at_least_3():
    with pytest.raises(ValueError):
        coset_size_profile(2, 11)


def test_classify():
    assert classify(5) == ("A", 2)
    assert classify(17, 3) == ("A", 3)
    assert classify(11) == ("B", 3)
    assert classify(19) == ("B", 4)
    for bad in (4, 7, 23):
        with pytest.raises(ValueError, match="unsupported parameter family"):
            classify(bad)


def test_negation():
    assert negate_set({0}, 8) == {0}
    assert negate_set({1, 5}, 8) == {7, 3}


@given(st.integers(1, 7), st.sets(st.integers(0, 127)))
def test_negation_involution(e, S):
    n = 2**e
    S = {x % n for x in S}
    assert negate_set(negate_set(S, n), n) == S


def _block_shape(n, q):
    return sorted((b.kind, b.leaders) for b in symmetric_blocks(n, q))


def test_blocks_examples():
    assert _block_shape(8, 5) == [("paired", (1, 3)), ("paired", (2, 6)), ("self", (0,)), ("self", (4,))]
    assert _block_shape(16, 11) == [("paired", (1, 5)), ("paired", (2, 10)),
                                    ("self", (0,)), ("self", (4,)), ("self", (8,))]
    assert [b.kind for b in symmetric_blocks(2, 3)] == ["self", "self"]


@pytest.mark.parametrize("q", QS)
@pytest.mark.parametrize("e", range(3, 7))
def test_block_laws(e, q):
    n = 2**e
    blocks = symmetric_blocks(n, q)
    for b in blocks:
        assert negate_set(b.elements, n) == set(b.elements)
        if b.kind == "paired":
            c1, c2 = b.cosets
            assert not set(c1.elements) & set(c2.elements)
    assert sorted(x for b in blocks for x in b.elements) == list(range(n))
    family, s = classify(q, e)
    if family == "B" or s < e:
        assert len(blocks) == expected_block_count(e, q)
