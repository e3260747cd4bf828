"""Z_n under multiplication by q: cyclotomic cosets, the 2-adic level
partition T_0..T_e of Z_{2^e}, negation, and negation-symmetric blocks."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .gf import multiplicative_order_mod


@dataclass(frozen=True)
class CyclotomicCoset:
    leader: int
    elements: tuple

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, a):
        return a in self.elements

    def __str__(self):
        return f"{self.leader}: {{{', '.join(map(str, self.elements))}}}"


@dataclass(frozen=True)
class TPartition:
    e: int
    levels: tuple  # levels[i] is the sorted tuple T_i

    @property
    def n(self):
        return 2**self.e

    def level_of(self, a: int) -> int:
        """2-adic valuation of ``a`` in Z_n (``e`` for 0)."""
        a %= self.n
        if a == 0:
            return self.e
        return (a & -a).bit_length() - 1


@dataclass(frozen=True)
class SymmetricBlock:
    kind: str  # "paired" or "self"
    cosets: tuple  # one coset (self) or two (paired), ordered by leader
    elements: tuple

    @property
    def leaders(self):
        return tuple(c.leader for c in self.cosets)


def multiplicative_order(q: int, n: int) -> int:
    """Smallest r >= 1 with q^r = 1 (mod n)."""
    return multiplicative_order_mod(q, n)


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def v2(x: int) -> int:
    """2-adic valuation of a nonzero integer."""
    if x == 0:
        raise ValueError("v2(0) is undefined")
    x = abs(x)
    return (x & -x).bit_length() - 1


def cyclotomic_coset(a: int, n: int, q: int) -> CyclotomicCoset:
    if not 0 <= a < n:
        raise ValueError(f"residue {a} outside Z_{n}")
    orbit = {a}
    x = a * q % n
    while x not in orbit:
        orbit.add(x)
        x = x * q % n
    elems = tuple(sorted(orbit))
    return CyclotomicCoset(elems[0], elems)


@lru_cache(maxsize=None)
def coset_leaders(n: int, q: int) -> tuple:
    """All q-cyclotomic cosets mod n, sorted by leader."""
    if gcd(n, q) != 1:
        raise ValueError(f"gcd({n}, {q}) != 1")
    seen = [False] * n
    out = []
    for a in range(n):
        if not seen[a]:
            c = cyclotomic_coset(a, n, q)
            for x in c.elements:
                seen[x] = True
            out.append(c)
    return tuple(out)


@lru_cache(maxsize=None)
def coset_map(n: int, q: int) -> dict:
    """leader -> coset."""
    return {c.leader: c for c in coset_leaders(n, q)}


@lru_cache(maxsize=None)
def leader_of(n: int, q: int) -> tuple:
    """Tuple indexed by residue giving its coset leader."""
    table = [0] * n
    for c in coset_leaders(n, q):
        for x in c.elements:
            table[x] = c.leader
    return tuple(table)


def t_partition(e: int) -> TPartition:
    if e < 1:
        raise ValueError("e must be >= 1")
    n = 2**e
    levels = []
    for i in range(e):
        levels.append(tuple(sorted((2**i * k) % n for k in range(1, 2 ** (e - i) + 1, 2))))
    levels.append((0,))
    flat = [x for lvl in levels for x in lvl]
    if sorted(flat) != list(range(n)):
        raise AssertionError("T-levels do not partition Z_n")
    return TPartition(e, tuple(levels))


def exponent_of_two(n: int) -> int:
    if n < 2 or n & (n - 1):
        raise ValueError(f"n = {n} is not a power of two >= 2")
    return n.bit_length() - 1


def classify(q: int, e: int | None = None):
    """Return ``(family, s)`` for odd ``q``.

    Family ``"A"`` is ``q = 2^s f + 1`` with ``s = v2(q - 1) >= 2``; family
    ``"B"`` is ``q = 2^s f + 3`` with ``s = v2(q - 3) >= 3``.  When ``e`` is
    given and ``s > e`` for family A, ``s`` is clipped to ``e`` (q = 1 mod n,
    every coset a singleton).
    """
    if q % 2 == 0:
        raise ValueError("unsupported parameter family: q is even")
    if q % 4 == 1:
        s = v2(q - 1)
        if e is not None:
            s = min(s, e)
        return "A", s
    if q % 8 == 3:
        return "B", (v2(q - 3) if q != 3 else None)
    raise ValueError(f"unsupported parameter family: q = {q} = 7 mod 8")


def raw_profile(e: int, q: int) -> dict:
    """level -> (coset size, coset count), measured from :func:`coset_leaders`."""
    n = 2**e
    part = t_partition(e)
    prof: dict[int, dict[int, int]] = {}
    for c in coset_leaders(n, q):
        lvl = part.level_of(c.leader)
        if any(part.level_of(x) != lvl for x in c.elements):
            raise AssertionError(f"coset {c} straddles T-levels")
        sizes = prof.setdefault(lvl, {})
        sizes[len(c)] = sizes.get(len(c), 0) + 1
    out = {}
    for lvl in range(e + 1):
        sizes = prof[lvl]
        if len(sizes) != 1:
            raise AssertionError(f"level {lvl} has mixed coset sizes {sizes}")
        ((size, count),) = sizes.items()
        out[lvl] = (size, count)
    return out


def coset_size_profile(e: int, q: int) -> dict:
    """Closed-form level -> (coset size, coset count), checked against the raw cosets."""
    family, s = classify(q, e)
    out = {}
    if family == "A":
        t = e - s
        for i in range(e + 1):
            if i < t:
                out[i] = (2 ** (t - i), 2 ** (s - 1))
            else:
                out[i] = (1, 2 ** (e - i - 1) if i < e else 1)
    else:
        if e < 3:
            raise ValueError("the q = 3 (mod 8) profile needs e >= 3")
        for i in range(e - 2):
            out[i] = (2 ** (e - i - 2), 2)
        out[e - 2] = (2, 1)
        out[e - 1] = (1, 1)
        out[e] = (1, 1)
    measured = raw_profile(e, q)
    if measured != out:
        raise AssertionError(f"closed-form profile {out} disagrees with cosets {measured}")
    return out


def negate_set(S, n: int) -> frozenset:
    return frozenset((-x) % n for x in S)


@lru_cache(maxsize=None)
def symmetric_blocks(n: int, q: int) -> tuple:
    """Partition the cosets into self-negating singletons and {C_a, -C_a} pairs."""
    cmap = coset_map(n, q)
    lead = leader_of(n, q)
    done = set()
    blocks = []
    for c in coset_leaders(n, q):
        if c.leader in done:
            continue
        neg_leader = lead[(-c.leader) % n]
        if neg_leader == c.leader:
            blocks.append(SymmetricBlock("self", (c,), c.elements))
            done.add(c.leader)
        else:
            other = cmap[neg_leader]
            if set(other.elements) & set(c.elements):
                raise AssertionError("paired cosets overlap")
            blocks.append(SymmetricBlock("paired", (c, other), tuple(sorted(c.elements + other.elements))))
            done.update((c.leader, neg_leader))
    return tuple(blocks)


def expected_block_count(e: int, q: int) -> int:
    """Block count predicted for the two q-families (LCD-count exponents)."""
    family, s = classify(q, e)
    if family == "A":
        return (e - s + 2) * 2 ** (s - 2) + 1
    return e + 1
