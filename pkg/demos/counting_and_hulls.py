"""
Counting codes and hull dimensions
==================================

Closed-form counts next to brute-force enumeration over every defining set.
"""

from cyclotome import from_defining_set, hull_dimension_matrix_oracle, hull_spectrum
from cyclotome.cyclotomy import count_report

for e, s, family in [(3, 2, "A"), (4, 2, "A"), (4, 3, "B")]:
    print(f"e={e} s={s} family {family}")
    for name, closed, exhaustive, status in count_report(e, s, family):
        print(f"  {name}: {closed} vs {exhaustive} [{status}]")

# hull dimension from the defining set vs from matrix ranks
code = from_defining_set([1, 2, 3, 4], 8, 5)
print(code.parameters(code.min_distance()), code.hull_dimension, hull_dimension_matrix_oracle(code))

# how many codes of length 16 over GF(11) have each hull dimension
print(dict(sorted(hull_spectrum(16, 11).items())))
