"""Exact arithmetic in prime fields GF(p) and their extensions GF(p^m).

Elements are plain immutable values: ints in ``[0, p)`` for :class:`PrimeField`
and length-``m`` tuples of ints (ascending powers of the generator) for
:class:`ExtField`.  All field methods are pure.
"""
from __future__ import annotations

from functools import lru_cache
from math import gcd

import sympy

MAX_PRIME = 2**31


class PrimeField:
    """The prime field GF(p) for an odd prime ``p``."""

    def __init__(self, p: int):
        p = int(p)
        if p == 2:
            raise ValueError("characteristic 2 is not supported")
        if p < 3 or p >= MAX_PRIME or not sympy.isprime(p):
            raise ValueError(f"{p} is not an odd prime below 2^31")
        self.p = p
        self.order = p
        self.characteristic = p
        self.degree = 1
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __call__(self, value: int) -> int:
        return int(value) % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(a, -1, self.p)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return pow(self.inv(a), -k, self.p)
        return pow(a, k, self.p)

    def is_zero(self, a: int) -> bool:
        return a == 0

    def elements(self):
        return range(self.p)

    def format(self, a: int) -> str:
        return str(a)


class ExtField:
    """GF(p^m) realised as GF(p)[x] / (modulus).

    ``modulus`` is the ascending coefficient tuple of a monic irreducible
    polynomial of degree ``m``; :func:`find_irreducible` supplies the
    canonical one.
    """

    def __init__(self, base: PrimeField, modulus, check: bool = True):
        modulus = tuple(base(c) for c in modulus)
        if len(modulus) < 2 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        if check and not is_irreducible(base.p, modulus):
            raise ValueError(f"modulus {modulus} is reducible over {base}")
        self.base = base
        self.p = base.p
        self.m = len(modulus) - 1
        self.modulus = modulus
        self.order = self.p**self.m
        self.characteristic = self.p
        self.degree = self.m
        self.zero = (0,) * self.m
        self.one = (1,) + (0,) * (self.m - 1)

    def __repr__(self):
        return f"GF({self.p}^{self.m})"

    def __eq__(self, other):
        return isinstance(other, ExtField) and other.modulus == self.modulus and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p, self.modulus))

    def __call__(self, value) -> tuple:
        """Coerce an int (base-field scalar) or coefficient sequence."""
        if isinstance(value, int):
            return (value % self.p,) + (0,) * (self.m - 1)
        value = [int(c) % self.p for c in value]
        if len(value) > self.m:
            return self._reduce(value)
        return tuple(value) + (0,) * (self.m - len(value))

    def embed(self, a: int) -> tuple:
        return self(a)

    def in_base(self, a: tuple) -> bool:
        return not any(a[1:])

    def to_base(self, a: tuple) -> int:
        if not self.in_base(a):
            raise ValueError(f"{a} does not lie in the prime subfield")
        return a[0]

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def _reduce(self, prod: list) -> tuple:
        p, m, mod = self.p, self.m, self.modulus
        for k in range(len(prod) - 1, m - 1, -1):
            c = prod[k] % p
            if c:
                base = k - m
                for i in range(m):
                    prod[base + i] -= c * mod[i]
            prod[k] = 0
        return tuple(c % p for c in prod[:m])

    def mul(self, a, b):
        m = self.m
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return self._reduce(prod)

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        result = self.one
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def inv(self, a):
        if not any(a):
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(a, self.order - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return not any(a)

    def from_index(self, k: int) -> tuple:
        """Element whose base-p digits (least significant first) are ``k``."""
        digits = []
        for _ in range(self.m):
            k, d = divmod(k, self.p)
            digits.append(d)
        return tuple(digits)

    def elements(self):
        return (self.from_index(k) for k in range(self.order))

    def format(self, a) -> str:
        terms = []
        for i in range(self.m - 1, -1, -1):
            c = a[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "a" if i == 1 else f"a^{i}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) or "0"


# --- raw GF(p)[x] helpers on ascending coefficient lists -------------------
# Kept local so the field layer does not depend on the Polynomial class.

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, f, p):
    a = [c % p for c in a]
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    for k in range(len(a) - 1, df - 1, -1):
        c = a[k] * inv_lead % p
        if c:
            base = k - df
            for i in range(df + 1):
                a[base + i] = (a[base + i] - c * f[i]) % p
    return _trim(a[:df])


def _pmulmod(a, b, f, p):
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return _pmod(prod, f, p)


def _ppowmod(a, k, f, p):
    result = [1]
    base = _pmod(a, f, p)
    while k:
        if k & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        k >>= 1
    return result


def _pgcd(a, b, p):
    a, b = _trim([c % p for c in a]), _trim([c % p for c in b])
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(p: int, f) -> bool:
    """Ben-Or test: ``gcd(f, x^(p^i) - x mod f) == 1`` for ``1 <= i <= m/2``."""
    f = _trim([int(c) % p for c in f])
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    if f[0] == 0:
        return False
    xpow = [0, 1]
    for _ in range(m // 2):
        xpow = _ppowmod(xpow, p, f, p)
        diff = list(xpow) + [0] * max(0, 2 - len(xpow))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(f, _trim(diff), p)) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def find_irreducible(p: int, m: int) -> tuple:
    """Smallest monic irreducible of degree ``m`` over GF(p).

    Candidates are scanned in order of the integer ``sum(c_i * p^i)`` taken
    over the non-leading coefficients, i.e. leading terms dominate; the
    result is returned as an ascending coefficient tuple.
    """
    if m < 1:
        raise ValueError("degree must be >= 1")
    for k in range(p**m):
        low = []
        for _ in range(m):
            k, d = divmod(k, p)
            low.append(d)
        f = tuple(low) + (1,)
        if is_irreducible(p, f):
            return f
    raise AssertionError("unreachable: irreducibles exist in every degree")


def multiplicative_order_mod(q: int, n: int) -> int:
    if gcd(q, n) != 1:
        raise ValueError(f"gcd({q}, {n}) != 1")
    if n == 1:
        return 1
    r, x = 1, q % n
    while x != 1:
        x = x * q % n
        r += 1
    return r


def element_order(F, a, group_factors=None) -> int:
    """Multiplicative order of a nonzero element ``a`` of ``F``."""
    if F.is_zero(a):
        raise ValueError("zero has no multiplicative order")
    N = F.order - 1
    if group_factors is None:
        group_factors = sympy.factorint(N)
    order = N
    for prime, mult in group_factors.items():
        for _ in range(mult):
            if F.pow(a, order // prime) == F.one:
                order //= prime
            else:
                break
    return order


@lru_cache(maxsize=None)
def splitting_field(n: int, q: int) -> ExtField:
    """GF(q^r) with ``r = ord_n(q)``, built on the canonical irreducible."""
    base = PrimeField(q)
    r = multiplicative_order_mod(q, n)
    return ExtField(base, find_irreducible(q, r), check=False)


@lru_cache(maxsize=None)
def primitive_element(F: ExtField) -> tuple:
    """First element in index order whose multiplicative order is ``|F| - 1``."""
    N = F.order - 1
    factors = sympy.factorint(N)
    for k in range(1, F.order):
        g = F.from_index(k)
        if all(F.pow(g, N // prime) != F.one for prime in factors):
            return g
    raise AssertionError("unreachable: finite fields have primitive elements")


@lru_cache(maxsize=None)
def primitive_nth_root(n: int, q: int):
    """Return ``(F, xi)`` with ``xi`` of multiplicative order exactly ``n`` in F.

    ``F = GF(q^r)``, ``r = ord_n(q)``, and ``xi = gamma^((q^r - 1)/n)`` where
    ``gamma`` is :func:`primitive_element` of ``F``.
    """
    if gcd(n, q) != 1:
        raise ValueError(f"gcd(n, q) = gcd({n}, {q}) != 1")
    F = splitting_field(n, q)
    gamma = primitive_element(F)
    xi = F.pow(gamma, (F.order - 1) // n)
    return F, xi
