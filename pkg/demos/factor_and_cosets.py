"""
Cosets and the factorization of x^n - 1
=======================================

Cyclic codes of length n over GF(q) are built from the irreducible factors
of x^n - 1, one factor per q-cyclotomic coset mod n.
"""

from cyclotome import coset_leaders, factor_xn_minus_1, t_partition
from cyclotome.cosets import coset_size_profile

# cosets of 5 acting on Z_8
for c in coset_leaders(8, 5):
    print(c)

# the matching minimal polynomials, keyed by coset leader
fac = factor_xn_minus_1(8, 5)
for leader, f in sorted(fac.factors.items()):
    print(f"m_{leader}(x) = {f}")
print("product:", fac.product())

# residues split into levels by their 2-adic valuation; each coset stays in one level
part = t_partition(4)
print(part.levels)

# per level: (coset size, how many cosets) for q = 11
print(coset_size_profile(4, 11))
