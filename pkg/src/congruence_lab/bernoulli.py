"""Bernoulli numbers as exact rationals, their residues mod p, and the
classical denominator-structure check.

Convention: B_1 = -1/2 (the expansion of z/(e^z - 1)); odd indices >= 3
vanish.  Only small indices are ever needed (m <= p - 3 at desk scale), so
the quadratic-time recurrence is both fast enough and self-evidently
correct.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .modring import NotPAdicIntegerError, Residue, is_prime, reduce_rational


@lru_cache(maxsize=None)
def _bernoulli_tuple(max_index: int) -> tuple[Fraction, ...]:
    values = [Fraction(1)]
    for m in range(1, max_index + 1):
        acc = sum(comb(m + 1, j) * values[j] for j in range(m))
        values.append(Fraction(-acc, m + 1))
    return tuple(values)


def bernoulli_exact(max_index: int) -> list[Fraction]:
    """B_0 .. B_max_index via the recurrence sum_{j=0}^{m} C(m+1,j) B_j = 0."""
    if max_index < 0:
        raise ValueError(f"max_index must be >= 0, got {max_index}")
    return list(_bernoulli_tuple(max_index))


def bernoulli_mod_p(m: int, p: int) -> Residue:
    """B_m reduced mod p.

    For m > 0 with (p-1) | m the reduced denominator of B_m is divisible by
    p, so no residue exists and NotPAdicIntegerError is raised.  For m < p-1
    (the only range used downstream, via B_{p-3}) the reduction always
    succeeds.
    """
    if m < 0:
        raise ValueError(f"index must be >= 0, got {m}")
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if m > 0 and m % (p - 1) == 0:
        raise NotPAdicIntegerError(f"B_{m} is not {p}-integral since {p - 1} | {m}")
    return reduce_rational(_bernoulli_tuple(m)[m], p)


def check_von_staudt_clausen(n: int) -> bool:
    """True iff B_{2n} + sum of 1/p over primes p with (p-1) | 2n is an integer."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    k = 2 * n
    total = _bernoulli_tuple(k)[k] + sum(
        Fraction(1, d + 1) for d in range(1, k + 1) if k % d == 0 and is_prime(d + 1)
    )
    return total.denominator == 1
