"""The harmonic triple sum  sum 1/(ijk)  over a1*i + a2*j + a3*k = A*n with
gcd(ijk, n) = 1, evaluated two independent ways modulo p^r:

* ``triple_sum_bruteforce`` enumerates every solution directly (the audit
  oracle), and
* ``closed_form_rhs`` evaluates
  -2 * B_{p-3} * (n/p) * structure_factor * euler_like_product
  as one exact rational.

The congruence asserts the two agree in Z/p^r whenever p^r exactly divides n
and p divides none of the weights.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .bernoulli import bernoulli_exact
from .modring import Modulus, Residue, is_prime, p_valuation, reduce_rational


@dataclass(frozen=True)
class WeightTriple:
    """Weights (a1, a2, a3), a common multiple A, and the derived gcd structure."""

    a1: int
    a2: int
    a3: int
    A: int
    g1: int = field(init=False)  # gcd(a2, a3)
    g2: int = field(init=False)  # gcd(a3, a1)
    g3: int = field(init=False)  # gcd(a1, a2)
    g: int = field(init=False)  # gcd(a1, a2, a3)

    def __post_init__(self) -> None:
        if min(self.a1, self.a2, self.a3, self.A) < 1:
            raise ValueError("weights and A must be positive")
        for a in (self.a1, self.a2, self.a3):
            if self.A % a != 0:
                raise ValueError(
                    f"A={self.A} is not a common multiple of "
                    f"({self.a1}, {self.a2}, {self.a3})"
                )
        object.__setattr__(self, "g1", gcd(self.a2, self.a3))
        object.__setattr__(self, "g2", gcd(self.a3, self.a1))
        object.__setattr__(self, "g3", gcd(self.a1, self.a2))
        object.__setattr__(self, "g", gcd(self.a1, self.a2, self.a3))

    @property
    def weights(self) -> tuple[int, int, int]:
        return (self.a1, self.a2, self.a3)


@dataclass
class VerificationReport:
    """One congruence instance: both sides' residues, the match flag, timing."""

    label: str
    params: dict
    lhs: Residue
    rhs: Residue
    match: bool
    elapsed: float  # seconds


def derive_gcd_structure(a1: int, a2: int, a3: int, A: int) -> WeightTriple:
    """Validate that A is a common multiple of the weights and fill in gcds."""
    return WeightTriple(a1, a2, a3, A)


def reduce_to_coprime(w: WeightTriple) -> WeightTriple:
    """Rescale to pairwise-coprime weights.

    b1 = a1*g/(g2*g3), b2 = a2*g/(g3*g1), b3 = a3*g/(g1*g2) are pairwise
    coprime integers and C = A*g^2/(g1*g2*g3) is a common multiple of them;
    integrality and coprimality are guaranteed, so both are asserted.
    """
    b1, rem1 = divmod(w.a1 * w.g, w.g2 * w.g3)
    b2, rem2 = divmod(w.a2 * w.g, w.g3 * w.g1)
    b3, rem3 = divmod(w.a3 * w.g, w.g1 * w.g2)
    C, rem_c = divmod(w.A * w.g * w.g, w.g1 * w.g2 * w.g3)
    assert rem1 == rem2 == rem3 == rem_c == 0, "rescaled weights must be integers"
    out = WeightTriple(b1, b2, b3, C)
    assert gcd(out.a1, out.a2) == gcd(out.a2, out.a3) == gcd(out.a3, out.a1) == 1
    return out


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization by trial division, primes strictly increasing."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def _coprime_flags(n: int, limit: int) -> bytearray:
    """flags[x] = 1 iff gcd(x, n) = 1, for 0 <= x <= limit."""
    flags = bytearray([1]) * (limit + 1)
    flags[0] = 0
    for q, _ in factorize(n):
        if q <= limit:
            flags[q :: q] = bytes(len(range(q, limit + 1, q)))
    return flags


def _check_weights_coprime_to_p(w: WeightTriple, p: int) -> None:
    if any(a % p == 0 for a in w.weights):
        raise ValueError(f"p={p} divides one of the weights {w.weights}")


def triple_sum_bruteforce(w: WeightTriple, n: int, modulus: Modulus) -> Residue:
    """Direct enumeration of the triple sum, accumulated in Z/p^r.

    Loops i, then j, and solves for k; every term (ijk)^(-1) exists because
    gcd(ijk, n) = 1 and p | n.  O((An)^2 / (a1*a2)) time with precomputed
    coprimality flags and inverse tables, which keeps desk-scale grids fast
    while staying a transparently correct oracle.
    """
    _check_weights_coprime_to_p(w, modulus.p)
    if n < 1 or n % modulus.p != 0:
        raise ValueError(f"p={modulus.p} must divide n={n}")
    An = w.A * n
    m = modulus.m
    cop = _coprime_flags(n, An)
    inv = [0] * (An + 1)
    for x in range(1, An + 1):
        if cop[x]:
            inv[x] = pow(x, -1, m)
    a1, a2, a3 = w.weights
    total = 0
    for i in range(1, (An - a2 - a3) // a1 + 1):
        if not cop[i]:
            continue
        inv_i = inv[i]
        rem_i = An - a1 * i
        for j in range(1, (rem_i - a3) // a2 + 1):
            if not cop[j]:
                continue
            k, rk = divmod(rem_i - a2 * j, a3)
            if rk or not cop[k]:
                continue
            total = (total + inv_i * inv[j] * inv[k]) % m
    return Residue(total, m)


def structure_factor(w: WeightTriple) -> Fraction:
    """(A*g^3/3) * (1/(a1*g1)^2 + 1/(a2*g2)^2 + 1/(a3*g3)^2), exactly.

    A p-adic integer for every p coprime to the weights: immediate for
    p >= 5, and for p = 3 because squares of units are 1 mod 3, making the
    three-term numerator divisible by 3.
    """
    return Fraction(w.A * w.g**3, 3) * (
        Fraction(1, (w.a1 * w.g1) ** 2)
        + Fraction(1, (w.a2 * w.g2) ** 2)
        + Fraction(1, (w.a3 * w.g3) ** 2)
    )


def euler_like_product(n: int, p: int) -> Fraction:
    """Product of (1 - 2/q)(1 - 1/q^3) over primes q | n with q != p.

    The empty product (n a power of p) is 1; a factor q = 2 makes it 0.
    """
    if n % p != 0:
        raise ValueError(f"p={p} must divide n={n}")
    out = Fraction(1)
    for q, _ in factorize(n):
        if q != p:
            out *= (1 - Fraction(2, q)) * (1 - Fraction(1, q**3))
    return out


def closed_form_rhs(w: WeightTriple, n: int, p: int, r: int) -> Residue:
    """-2 * B_{p-3} * (n/p) * structure_factor(w) * euler_like_product(n, p)
    evaluated as one exact rational and reduced once into Z/p^r.

    Requires p^r to exactly divide n and p to divide no weight.  The rational
    is always p-adically integral; if the final reduction fails it signals an
    implementation bug, not a valid state.
    """
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    _check_weights_coprime_to_p(w, p)
    if r < 1 or p_valuation(n, p) != r:
        raise ValueError(f"p^r = {p}^{r} must exactly divide n = {n}")
    if p == 3:
        # squares of units are 1 mod 3, so this three-term sum must vanish mod 3
        sym = (
            (w.a1 * w.a2 * w.g1 * w.g2) ** 2
            + (w.a2 * w.a3 * w.g2 * w.g3) ** 2
            + (w.a3 * w.a1 * w.g3 * w.g1) ** 2
        )
        assert sym % 3 == 0
    b = bernoulli_exact(p - 3)[p - 3]
    rhs = (
        Fraction(-2)
        * b
        * Fraction(n, p)
        * structure_factor(w)
        * euler_like_product(n, p)
    )
    return reduce_rational(rhs, p, r)


def shared_weight_primes(w: WeightTriple, n: int, p: int) -> list[int]:
    """Primes q | n, q != p, that also divide a1*a2*a3 / g^3.

    After dividing out the common factor g (which cancels between the two
    sides), such a q ties the solution set to n in a way the closed form
    does not model, and the congruence can genuinely fail; callers should
    flag these instances rather than trust either outcome.  An empty list
    means the instance is inside the congruence's verified scope.
    """
    core = w.a1 * w.a2 * w.a3 // w.g**3
    return [q for q, _ in factorize(n) if q != p and core % q == 0]


def verify_main_theorem(w: WeightTriple, n: int, p: int) -> VerificationReport:
    """Run both sides of the congruence for one instance; r is inferred from n."""
    t0 = time.perf_counter()
    if n < 1 or n % p != 0:
        raise ValueError(f"p={p} must divide n={n}")
    r = p_valuation(n, p)
    modulus = Modulus(p, r)
    lhs = triple_sum_bruteforce(w, n, modulus)
    rhs = closed_form_rhs(w, n, p, r)
    return VerificationReport(
        label="main-congruence",
        params={"p": p, "r": r, "n": n, "a": list(w.weights), "A": w.A},
        lhs=lhs,
        rhs=rhs,
        match=lhs == rhs,
        elapsed=time.perf_counter() - t0,
    )
