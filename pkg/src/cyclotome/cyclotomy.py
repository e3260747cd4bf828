"""Order-two generalized cyclotomies of Z_{2^e}^*, the two half-rate code
constructions built on them, and closed-form counts of cyclic codes next to
their exhaustive counterparts.

Family ``"A"`` means ``q = 2^s f + 1`` (s >= 2, f odd), family ``"B"`` means
``q = 2^s f + 3`` (s >= 3, f odd).  Construction ``"eq2"`` uses the W classes
over family A, ``"eq4"`` the U classes over family B.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb

from .codes import DefiningSet, from_defining_set, from_generator
from .cosets import (
    classify,
    coset_leaders,
    multiplicative_order,
    negate_set,
    t_partition,
)
from .gf import primitive_nth_root
from .poly import Polynomial

EXHAUSTIVE_CAP = 2**20


@dataclass(frozen=True)
class CyclotomyClasses:
    family: str  # "W" or "U"
    e: int
    class0: frozenset
    class1: frozenset

    @property
    def n(self):
        return 2**self.e

    def __getitem__(self, j):
        if j not in (0, 1):
            raise IndexError("class index must be 0 or 1")
        return self.class1 if j else self.class0

    def is_stable_under(self, q: int) -> bool:
        n = self.n
        return all({(q * a) % n for a in c} == c for c in (self.class0, self.class1))


@dataclass(frozen=True)
class ConstructionChoice:
    """One raw selection feeding a construction.

    ``selections`` holds, per level ``i``, the pair ``(i, D)`` where ``D`` is
    the sorted residue tuple actually used at that level (``D_0`` or ``D_1``).
    ``alternative`` is only meaningful for eq4: 0 keeps ``d^(e-2)``, 1 uses
    ``d_0^(e-1) d_1^(e-1)`` instead.
    """

    family: str
    e: int
    j: int
    selections: tuple
    alternative: int = 0

    def residues(self, classes: CyclotomyClasses) -> frozenset:
        out = set(classes[self.j])
        for _, D in self.selections:
            out.update(D)
        return frozenset(out)


def _check_e(e):
    if e < 3:
        raise ValueError("the cyclotomies need e >= 3")


def w_classes(e: int) -> CyclotomyClasses:
    """W_0 = <5> and W_1 = -W_0 inside Z_{2^e}^*."""
    _check_e(e)
    n = 2**e
    half = 2 ** (e - 2)
    if multiplicative_order(5, n) != half:
        raise AssertionError("5 does not have order 2^(e-2) mod 2^e")
    w0 = frozenset(pow(5, b, n) for b in range(half))
    w1 = frozenset((-pow(5, b, n)) % n for b in range(half))
    _check_classes(w0, w1, n, half)
    return CyclotomyClasses("W", e, w0, w1)


def u_classes(e: int) -> CyclotomyClasses:
    """U_0 = {5^even} ∪ {-5^odd}, U_1 = {5^odd} ∪ {-5^even}."""
    _check_e(e)
    n = 2**e
    half = 2 ** (e - 2)
    u0 = frozenset([pow(5, i, n) for i in range(0, half, 2)] + [(-pow(5, j, n)) % n for j in range(1, half, 2)])
    u1 = frozenset([pow(5, i, n) for i in range(1, half, 2)] + [(-pow(5, j, n)) % n for j in range(0, half, 2)])
    _check_classes(u0, u1, n, half)
    return CyclotomyClasses("U", e, u0, u1)


def _check_classes(c0, c1, n, half):
    units = {a for a in range(n) if a % 2}
    if c0 & c1 or (c0 | c1) != units:
        raise AssertionError("classes do not partition Z_n^*")
    if negate_set(c0, n) != c1:
        raise AssertionError("class0 is not the negation of class1")
    if len(c0) != half or len(c1) != half:
        raise AssertionError("class sizes differ from 2^(e-2)")


def _roots_polynomial(residues, n: int, q: int) -> Polynomial:
    """``prod_{i in residues} (x - xi^i)`` pulled back to GF(q)."""
    F, xi = primitive_nth_root(n, q)
    m = Polynomial.from_roots(F, [F.pow(xi, i) for i in sorted(residues)])
    if not all(F.in_base(c) for c in m.coeffs):
        raise ArithmeticError("coefficient outside the base field: residue set is not q-stable")
    return Polynomial(F.base, [F.to_base(c) for c in m.coeffs])


def class_polynomial(classes: CyclotomyClasses, j: int, q: int) -> Polynomial:
    """w_j(x) or u_j(x): the product of ``x - xi^i`` over class ``j``."""
    if not classes.is_stable_under(q):
        raise ArithmeticError(
            f"q = {q} does not fix the {classes.family} classes; the class polynomial is not over GF({q})"
        )
    return _roots_polynomial(classes[j], classes.n, q)


# --- constructions ----------------------------------------------------------

def _family_for(construction: str) -> str:
    if construction == "eq2":
        return "A"
    if construction == "eq4":
        return "B"
    raise ValueError(f"unknown construction {construction!r}; expected 'eq2' or 'eq4'")


def check_family(construction: str, e: int, q: int) -> int:
    """Validate ``q`` for a construction and return its ``s``."""
    _check_e(e)
    fam = _family_for(construction)
    try:
        got, s = classify(q)
    except ValueError:
        got, s = None, None
    if construction == "eq2":
        if got != "A":
            raise ValueError(f"construction eq2 needs q = 1 (mod 4), i.e. q = 2^s f + 1 with s >= 2; got q = {q}")
        if s >= e:
            raise ValueError(f"construction eq2 needs s = v2(q-1) < e; got s = {s}, e = {e}")
        return s
    if got != fam or s is None:
        raise ValueError(f"construction eq4 needs q = 3 (mod 8), i.e. q = 2^s f + 3 with s >= 3; got q = {q}")
    return s


def construction_choices(construction: str, e: int, q: int):
    """Yield every raw :class:`ConstructionChoice` (before de-duplication)."""
    s = check_family(construction, e, q)
    n = 2**e
    T = t_partition(e).levels
    cosets_at = {}
    for c in coset_leaders(n, q):
        cosets_at.setdefault(t_partition(e).level_of(c.leader), []).append(c)

    def splits(level, how_many):
        """All (D_0, D_1) splits of T_level taking ``how_many`` cosets into D_0."""
        cs = cosets_at[level]
        out = []
        for pick in combinations(cs, how_many):
            d0 = tuple(sorted(x for c in pick for x in c.elements))
            d1 = tuple(sorted(set(T[level]) - set(d0)))
            out.append((d0, d1))
        return out

    level_options = []  # per level: list of residue tuples selectable for d_{l_i}
    if construction == "eq2":
        t = e - s
        for i in range(1, e - 1):
            k = 2 ** (s - 2) if i < t else 2 ** (e - i - 2)
            opts = [(i, D) for d0, d1 in splits(i, k) for D in (d0, d1)]
            level_options.append(opts)
        level_options.append([(e - 1, T[e - 1]), (e - 1, T[e])])
        for j in (0, 1):
            for sel in product(*level_options):
                yield ConstructionChoice("eq2", e, j, tuple(sel))
    else:
        for i in range(1, e - 2):
            opts = [(i, D) for d0, d1 in splits(i, 1) for D in (d0, d1)]
            level_options.append(opts)
        tails = [((e - 2, T[e - 2]),), ((e - 1, T[e - 1]), (e, T[e]))]
        for j in (0, 1):
            for alt, tail in enumerate(tails):
                for sel in product(*level_options):
                    yield ConstructionChoice("eq4", e, j, tuple(sel) + tail, alt)


def construction_generator(choice: ConstructionChoice, q: int) -> Polynomial:
    """``w_j * prod d_{l_i}^{(i)}`` (eq2) or the eq4 analogue, built from roots."""
    e = choice.e
    n = 2**e
    classes = w_classes(e) if choice.family == "eq2" else u_classes(e)
    g = class_polynomial(classes, choice.j, q)
    for _, D in choice.selections:
        g = g * _level_polynomial(tuple(D), n, q)
    return g


@lru_cache(maxsize=None)
def _level_polynomial(D: tuple, n: int, q: int) -> Polynomial:
    return _roots_polynomial(D, n, q)


def enumerate_construction(construction: str, e: int, q: int, s: int | None = None) -> list:
    """All distinct codes from the eq2 / eq4 construction, sorted by generator."""
    got_s = check_family(construction, e, q)
    if s is not None and s != got_s:
        raise ValueError(f"q = {q} has s = {got_s}, not {s}")
    n = 2**e
    classes = w_classes(e) if construction == "eq2" else u_classes(e)
    seen = {}
    done = set()
    for choice in construction_choices(construction, e, q):
        key = choice.residues(classes)
        if key in done:
            continue
        done.add(key)
        g = construction_generator(choice, q)
        if g in seen:
            continue
        code = from_generator(g, n, q)
        if set(code.defining_set.residues) != key:
            raise AssertionError("construction generator disagrees with its defining set")
        if code.dimension != n // 2:
            raise AssertionError("construction produced a code of the wrong dimension")
        seen[g] = code
    return [seen[g] for g in sorted(seen, key=Polynomial.sort_key)]


def construction_count(construction: str, e: int, s: int) -> int:
    """Closed-form number of distinct generators of a construction."""
    _check_e(e)
    if construction == "eq2":
        _check_a(e, s)
        t = e - s
        total = 4 * comb(2 ** (s - 1), 2 ** (s - 2)) ** (t - 1)
        for i in range(t, e - 1):
            total *= comb(2 ** (e - i - 1), 2 ** (e - i - 2))
        return total
    if construction == "eq4":
        _check_b(s)
        return 2 ** (e - 1)
    raise ValueError(f"unknown construction {construction!r}")


# --- closed-form counts -----------------------------------------------------

def _check_a(e, s):
    if s is None or s < 2 or s >= e:
        raise ValueError(f"family A needs 2 <= s < e; got s = {s}, e = {e}")


def _check_b(s):
    if s is not None and s < 3:
        raise ValueError(f"family B needs s >= 3; got s = {s}")


def _check(e, s, family):
    _check_e(e)
    if family == "A":
        _check_a(e, s)
    elif family == "B":
        _check_b(s)
    else:
        raise ValueError(f"unknown family {family!r}; expected 'A' or 'B'")


def _level_groups(e, s, family):
    """(coset size, number of cosets) groups used by the half-dimension sums."""
    if family == "A":
        t = e - s
        return [(2 ** (t - i), 2 ** (s - 1)) for i in range(t)] + [(1, 2**s)]
    return [(2 ** (e - i - 2), 2) for i in range(e - 3)] + [(2, 3), (1, 2)]


def count_all_cyclic(e: int, s: int, family: str) -> int:
    _check(e, s, family)
    if family == "A":
        t = e - s
        return 2 ** (t * 2 ** (s - 1) + 2**s)
    return 2 ** (2 * e - 1)


def count_half_dim(e: int, s: int, family: str) -> int:
    """Sum over (j_i) with sum j_i * size_i = 2^(e-1) of prod binom(count_i, j_i)."""
    _check(e, s, family)
    target = 2 ** (e - 1)
    ways = {0: 1}
    for size, count in _level_groups(e, s, family):
        nxt: dict[int, int] = {}
        for w, c in ways.items():
            for j in range(count + 1):
                w2 = w + j * size
                if w2 > target:
                    break
                nxt[w2] = nxt.get(w2, 0) + c * comb(count, j)
        ways = nxt
    return ways.get(target, 0)


def count_lcd(e: int, s: int, family: str) -> int:
    _check(e, s, family)
    if family == "A":
        t = e - s
        return 2 ** ((t + 2) * 2 ** (s - 2) + 1)
    return 2 ** (e + 1)


def closed_form_hull_count(e: int, s: int, family: str, ell: int):
    """Closed form for the number of codes with hull dimension ``ell``, or None."""
    _check(e, s, family)
    if ell == 0:
        return count_lcd(e, s, family)
    if family == "A":
        t = e - s
        base = 2 ** ((t + 2) * 2 ** (s - 2))
        if ell == 1:
            return (2**s - 2) * base
        if ell == 2:
            return (2 ** (2 * s - 2) - 2**s + 2) * base
        return None
    if ell == 1:
        return 0
    if ell == 2:
        return 2 ** (e + 1)
    return None


def closed_form_hull_dims(e: int, s: int, family: str) -> frozenset:
    """Closed-form set of attainable hull dimensions for family A or B."""
    _check(e, s, family)
    if family == "A":
        t = e - s
        ranges = [range(2 ** (s - 1))] + [range(2 ** (s - 2) + 1)] * t
        return frozenset(sum(c * 2**i for i, c in enumerate(ns)) for ns in product(*ranges))
    return frozenset(sum(b * 2**i for i, b in zip(range(1, e), bits)) for bits in product((0, 1), repeat=e - 1))


# --- exhaustive counterparts ------------------------------------------------

def representative_q(e: int, s: int, family: str) -> int:
    """An integer multiplier with the family's coset structure mod 2^e.

    The coset structure depends only on the subgroup generated by q, which is
    fixed by (family, s); primality is irrelevant for counting.
    """
    _check(e, s, family)
    return 2**s + 1 if family == "A" else 2 ** (s or 3) + 3


def _coset_masks(n, q):
    cs = coset_leaders(n, q)
    if 2 ** len(cs) > EXHAUSTIVE_CAP:
        return None
    masks = [sum(1 << x for x in c.elements) for c in cs]
    neg = [sum(1 << ((-x) % n) for x in c.elements) for c in cs]
    sizes = [len(c) for c in cs]
    return cs, masks, neg, sizes


def hull_spectrum(n: int, q: int):
    """Counter hull-dimension -> number of cyclic codes, by brute force over all
    defining sets; ``None`` if there are more than ``EXHAUSTIVE_CAP`` of them."""
    data = _coset_masks(n, q)
    if data is None:
        return None
    cs, masks, neg, _ = data
    m = len(cs)
    S = [0] * (1 << m)
    N = [0] * (1 << m)
    spectrum = Counter()
    spectrum[0] += 1
    for i in range(1, 1 << m):
        low = (i & -i).bit_length() - 1
        prev = i & (i - 1)
        S[i] = S[prev] | masks[low]
        N[i] = N[prev] | neg[low]
        spectrum[bin(S[i] & ~N[i]).count("1")] += 1
    return spectrum


def exhaustive_count_all(n: int, q: int) -> int:
    return 2 ** len(coset_leaders(n, q))


def exhaustive_count_half_dim(n: int, q: int):
    data = _coset_masks(n, q)
    if data is None:
        return None
    _, _, _, sizes = data
    m = len(sizes)
    total = [0] * (1 << m)
    count = 1 if n // 2 == 0 else 0
    for i in range(1, 1 << m):
        low = (i & -i).bit_length() - 1
        total[i] = total[i & (i - 1)] + sizes[low]
        if total[i] == n // 2:
            count += 1
    return count


def enumerate_half_dim_codes(e: int, q: int) -> list:
    """Every cyclic code of length 2^e and dimension 2^(e-1), sorted by generator."""
    n = 2**e
    cs = coset_leaders(n, q)
    if 2 ** len(cs) > EXHAUSTIVE_CAP:
        raise ValueError("too many cosets for exhaustive enumeration")
    out = []
    for r in range(len(cs) + 1):
        for sub in combinations(cs, r):
            if sum(len(c) for c in sub) == n // 2:
                out.append(from_defining_set([c.leader for c in sub], n, q))
    return sorted(out, key=lambda c: c.generator.sort_key())


def all_defining_sets(n: int, q: int):
    """Yield every defining set (as a leader tuple)."""
    leaders = [c.leader for c in coset_leaders(n, q)]
    for r in range(len(leaders) + 1):
        yield from combinations(leaders, r)


def attainable_hull_dims(e: int, s: int, family: str, q: int | None = None) -> dict:
    """Closed-form set vs exhaustively attained hull dimensions, with an equality flag."""
    closed = closed_form_hull_dims(e, s, family)
    q = representative_q(e, s, family) if q is None else q
    spectrum = hull_spectrum(2**e, q)
    exhaustive = None if spectrum is None else frozenset(spectrum)
    return {
        "closed_form": closed,
        "exhaustive": exhaustive,
        "equal": None if exhaustive is None else closed == exhaustive,
    }


def count_hull_dim(e: int, s: int, family: str, ell: int, q: int | None = None) -> int:
    """Closed form when one exists, otherwise the exhaustive count."""
    closed = closed_form_hull_count(e, s, family, ell)
    if closed is not None:
        return closed
    q = representative_q(e, s, family) if q is None else q
    spectrum = hull_spectrum(2**e, q)
    if spectrum is None:
        raise ValueError("no closed form and too many defining sets for exhaustive counting")
    return spectrum.get(ell, 0)


def one_dim_hull_characterization(n: int, q: int) -> dict:
    """Check, over every defining set, that hull dimension 1 holds exactly when
    ``S \\ -S`` is a single point ``i*n/gcd(n, q-1)``."""
    from .codes import one_dimensional_hull_point

    checked = agree = ones = 0
    for leaders in all_defining_sets(n, q):
        S = DefiningSet.from_leaders(leaders, n, q)
        ell = len(set(S.residues) - negate_set(S.residues, n))
        point = one_dimensional_hull_point(S)
        checked += 1
        ones += ell == 1
        agree += (ell == 1) == (point is not None)
    return {"checked": checked, "one_dim": ones, "agree": agree == checked}


def count_report(e: int, s: int, family: str, q: int | None = None) -> list:
    """Rows ``(name, closed_form, exhaustive, status)`` for every counting result.

    ``status`` is "ok", "MISMATCH", "unverified" (too large to enumerate) or
    "discrepancy" for the attainable-set comparison.
    """
    q = representative_q(e, s, family) if q is None else q
    n = 2**e
    spectrum = hull_spectrum(n, q)
    rows = []

    def row(name, closed, exh):
        status = "unverified" if exh is None else ("ok" if closed == exh else "MISMATCH")
        rows.append((name, closed, exh, status))

    row("all cyclic codes", count_all_cyclic(e, s, family), exhaustive_count_all(n, q))
    row("dimension n/2", count_half_dim(e, s, family), exhaustive_count_half_dim(n, q))
    for ell in (0, 1, 2):
        row(f"hull dimension {ell}", closed_form_hull_count(e, s, family, ell), None if spectrum is None else spectrum.get(ell, 0))
    att = attainable_hull_dims(e, s, family, q)
    if att["exhaustive"] is None:
        rows.append(("attainable hull dims", sorted(att["closed_form"]), None, "unverified"))
    else:
        rows.append(("attainable hull dims", sorted(att["closed_form"]), sorted(att["exhaustive"]),
                     "ok" if att["equal"] else "discrepancy"))
    return rows
