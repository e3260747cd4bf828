"""Cyclic codes of length 2^e over odd prime fields: cosets, factorization of
x^n - 1, half-rate constructions from order-two cyclotomies, counting, hulls
and exact minimum distances."""
from .codes import (
    BudgetExceeded,
    CyclicCode,
    DefiningSet,
    dual_code,
    from_defining_set,
    from_generator,
    hull_dimension,
    hull_dimension_matrix_oracle,
    min_distance_bruteforce,
    min_distance_support,
)
from .cosets import classify, coset_leaders, cyclotomic_coset, t_partition
from .cyclotomy import (
    count_all_cyclic,
    count_half_dim,
    count_lcd,
    enumerate_construction,
    enumerate_half_dim_codes,
    hull_spectrum,
    u_classes,
    w_classes,
)
from .factor import factor_xn_minus_1
from .gf import ExtField, PrimeField, find_irreducible, is_irreducible
from .poly import Polynomial

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "CyclicCode", "DefiningSet", "ExtField", "Polynomial", "PrimeField",
    "classify", "coset_leaders", "count_all_cyclic", "count_half_dim", "count_lcd",
    "cyclotomic_coset", "dual_code", "enumerate_construction", "enumerate_half_dim_codes",
    "factor_xn_minus_1", "find_irreducible", "from_defining_set", "from_generator",
    "hull_dimension", "hull_dimension_matrix_oracle", "hull_spectrum", "is_irreducible",
    "min_distance_bruteforce", "min_distance_support", "t_partition", "u_classes", "w_classes",
]
