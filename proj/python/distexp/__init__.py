"""Distribution of the number of distinct exponents in prime factorizations.

Thin re-export of the compiled core. The interesting objects are the exact
counters (count_f_distribution, count_g_distribution, count_squarefree_coprime),
the density-constant estimators with enclosing intervals (ak_via_powerful,
ak_via_rho, b_r, m_phi) and the factorization-level helpers (f, g, omega,
is_special, powerful_part, rho).
"""

from ._distexp import (
    ConstantEstimate,
    ak_via_powerful,
    ak_via_rho,
    b_r,
    count_f_distribution,
    count_g_distribution,
    count_squarefree_coprime,
    count_squarefree_coprime_omega,
    dedekind_psi,
    f,
    factorize,
    g,
    is_powerful,
    is_prime,
    is_special,
    is_squarefree,
    m_phi,
    moment_sum,
    nested_geometric_check,
    numbers_with_deficiency_up_to,
    omega,
    powerful_part,
    powerful_reciprocal_sum,
    powerful_tail_bound,
    powerful_up_to,
    rho,
    special_powerful_up_to,
)

__all__ = [
    "ConstantEstimate",
    "ak_via_powerful",
    "ak_via_rho",
    "b_r",
    "count_f_distribution",
    "count_g_distribution",
    "count_squarefree_coprime",
    "count_squarefree_coprime_omega",
    "dedekind_psi",
    "f",
    "factorize",
    "g",
    "is_powerful",
    "is_prime",
    "is_special",
    "is_squarefree",
    "m_phi",
    "moment_sum",
    "nested_geometric_check",
    "numbers_with_deficiency_up_to",
    "omega",
    "powerful_part",
    "powerful_reciprocal_sum",
    "powerful_up_to",
    "rho",
    "special_powerful_up_to",
]

__version__ = "0.1.0"
