"""
Two exact minimum-distance algorithms
=====================================

Brute force runs over all q^k messages.  The support search looks for the
smallest set of linearly dependent columns of the parity-check matrix, which
is cheap when d is small even if q^k is huge.
"""

import time

from cyclotome import from_defining_set, min_distance_bruteforce, min_distance_support

code = from_defining_set([0, 1, 2, 8], 16, 5)
print(code.parameters(), "q^k =", code.q ** code.dimension)

for fn in (min_distance_bruteforce, min_distance_support):
    t0 = time.perf_counter()
    d = fn(code)
    print(f"{fn.__name__}: d = {d} in {time.perf_counter() - t0:.3f}s")

# a [32, 16] code over GF(19): 19^16 words, out of reach for brute force
big = from_defining_set([1, 2, 4, 8, 16], 32, 19)
print(big.parameters(min_distance_support(big)))
