"""
Half-rate codes from order-two cyclotomies
==========================================

Splitting the units of Z_{2^e} into two classes gives generator polynomials
of degree n/2 directly.  The W classes work when q = 1 (mod 4), the U classes
when q = 3 (mod 8).
"""

from cyclotome import enumerate_construction, u_classes, w_classes
from cyclotome.cyclotomy import class_polynomial, construction_count

w = w_classes(3)
print("W:", sorted(w.class0), sorted(w.class1))
print([str(class_polynomial(w, j, 5)) for j in (0, 1)])

codes = enumerate_construction("eq2", 3, 5)
print(len(codes), "codes, closed form", construction_count("eq2", 3, 2))
for c in codes:
    print(c.parameters(c.min_distance()), c.generator)

u = u_classes(4)
print("U:", sorted(u.class0), sorted(u.class1))
codes = enumerate_construction("eq4", 5, 19)
print(len(codes), "codes over GF(19), distances", {c.min_distance("support") for c in codes})
