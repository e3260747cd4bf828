"""Factor x^n - 1 over GF(q) into minimal polynomials indexed by coset leaders."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from operator import mul

from .cosets import CyclotomicCoset, coset_leaders, coset_map
from .gf import PrimeField, is_irreducible, primitive_nth_root
from .poly import Polynomial


@dataclass(frozen=True)
class Factorization:
    n: int
    q: int
    factors: dict  # coset leader -> monic irreducible Polynomial over GF(q)

    @property
    def field(self) -> PrimeField:
        return PrimeField(self.q)

    def product(self) -> Polynomial:
        return reduce(mul, self.factors.values(), Polynomial.one(self.field))

    def multiset(self) -> list:
        """Factors sorted canonically (independent of the choice of root)."""
        return sorted(self.factors.values(), key=Polynomial.sort_key)

    def leader_for(self, f: Polynomial) -> int:
        for a, m in self.factors.items():
            if m == f:
                return a
        raise KeyError(f"{f} is not an irreducible factor of x^{self.n} - 1")


def minimal_polynomial(coset: CyclotomicCoset, F, xi) -> Polynomial:
    """``prod_{i in C_a} (x - xi^i)`` computed in ``F`` and pulled back to GF(q)."""
    roots = [F.pow(xi, i) for i in coset.elements]
    m = Polynomial.from_roots(F, roots)
    for c in m.coeffs:
        if not F.in_base(c):
            raise ArithmeticError(
                f"minimal polynomial of coset {coset.leader} has a coefficient outside the base field"
            )
    return Polynomial(F.base, [F.to_base(c) for c in m.coeffs])


def factor_with_root(n: int, q: int, F, xi) -> Factorization:
    factors = {c.leader: minimal_polynomial(c, F, xi) for c in coset_leaders(n, q)}
    return Factorization(n, q, factors)


@lru_cache(maxsize=None)
def factor_xn_minus_1(n: int, q: int) -> Factorization:
    if n < 1 or n & (n - 1):
        raise ValueError(f"n = {n} must be a power of two")
    F, xi = primitive_nth_root(n, q)
    fac = factor_with_root(n, q, F, xi)
    cosets = coset_map(n, q)
    for a, m in fac.factors.items():
        if m.degree != len(cosets[a]):
            raise AssertionError(f"degree of m_{a} differs from its coset size")
    if fac.product() != Polynomial.x_n_minus_1(PrimeField(q), n):
        raise AssertionError("factor product differs from x^n - 1")
    return fac


def check_irreducible(f: Polynomial) -> bool:
    return is_irreducible(f.field.p, f.coeffs)
