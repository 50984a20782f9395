"""Chinese Remainder Theorem toolkit.

Several independent solution strategies over one congruence-system model,
a generic Euclidean-domain solver, residue rings, dense and sparse
polynomials over GF(p), finite equivalence relations, and a benchmark.
"""
from .crt import (
    CongruenceSystem,
    CrtSolution,
    EulerVariant,
    congruence_witnesses,
    euler_constants,
    garner_digits,
    garner_precompute,
    shift_to_range,
    solve_euler,
    solve_fold,
    solve_garner,
    solve_generic,
    solve_pair,
    solve_search,
    validate_system,
)
from .euclidean import INTEGERS, EuclideanDomain, are_coprime, eu_ext_gcd, eu_gcd
from .integer_core import euler_phi, ext_gcd, factorize, gcd, is_prime, mod_inverse, mod_pow
from .polynomials import DensePoly, PrimeField, SparsePoly, gfp_poly_domain

__version__ = "0.1.0"
