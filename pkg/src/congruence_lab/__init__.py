"""Exact-arithmetic verification of harmonic triple-sum congruences
modulo odd prime powers.

The library evaluates sums  sum 1/(ijk)  over a1*i + a2*j + a3*k = A*n with
gcd(ijk, n) = 1 in Z/p^r three independent ways (direct enumeration, a
Bernoulli-number closed form, and polynomial coefficient extraction) and
numerically checks every supporting congruence the closed form rests on.
"""

from .bernoulli import bernoulli_exact, bernoulli_mod_p, check_von_staudt_clausen
from .harmonic import (
    VerificationReport,
    WeightTriple,
    closed_form_rhs,
    derive_gcd_structure,
    euler_like_product,
    factorize,
    reduce_to_coprime,
    shared_weight_primes,
    structure_factor,
    triple_sum_bruteforce,
    verify_main_theorem,
)
from .lemmas import (
    LemmaInstance,
    arith_prog_inverse_sum,
    check_U_congruences,
    compute_U,
    double_sum_mod_cp,
    double_sum_same_residue,
    floor_weighted_sum,
    h_of_k,
    hk_pair_sum,
    inverse_power_sum,
    u_valuation_gap,
)
from .modring import (
    Modulus,
    NonInvertibleError,
    NotPAdicIntegerError,
    Residue,
    is_prime,
    mod_inverse,
    normalize,
    p_valuation,
    reduce_rational,
)
from .poly import (
    CoeffVector,
    check_induction_step,
    check_reflection,
    check_shift_lemma,
    convolve,
    eight_part_decomposition,
    extract_triple_coefficient,
    harmonic_poly,
)

__all__ = [
    "CoeffVector",
    "LemmaInstance",
    "Modulus",
    "NonInvertibleError",
    "NotPAdicIntegerError",
    "Residue",
    "VerificationReport",
    "WeightTriple",
    "arith_prog_inverse_sum",
    "bernoulli_exact",
    "bernoulli_mod_p",
    "check_U_congruences",
    "check_induction_step",
    "check_reflection",
    "check_shift_lemma",
    "check_von_staudt_clausen",
    "closed_form_rhs",
    "compute_U",
    "convolve",
    "derive_gcd_structure",
    "double_sum_mod_cp",
    "double_sum_same_residue",
    "eight_part_decomposition",
    "euler_like_product",
    "extract_triple_coefficient",
    "factorize",
    "floor_weighted_sum",
    "h_of_k",
    "harmonic_poly",
    "hk_pair_sum",
    "inverse_power_sum",
    "is_prime",
    "mod_inverse",
    "normalize",
    "p_valuation",
    "reduce_rational",
    "reduce_to_coprime",
    "shared_weight_primes",
    "structure_factor",
    "triple_sum_bruteforce",
    "u_valuation_gap",
    "verify_main_theorem",
]

__version__ = "0.1.0"
