"""Truncated generating polynomials f(x; M, N) = sum_{k <= MN, gcd(k,N)=1} x^k/k
over a fixed prime-power modulus, and the coefficient identities built on them.

The triple sum of ``harmonic`` equals [x^(An)] of the product of three such
polynomials (with x -> x^(a_i), M = A/a_i, N = n), which gives a second,
convolution-based route to the same residue.  The remaining checks here are
the reflection identity at 2AN, the block-shift identity relating
f(x; LM, N) to f(x; M, N), and the lift of the sum from level n to level
q^s * n.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .harmonic import (
    VerificationReport,
    WeightTriple,
    factorize,
    triple_sum_bruteforce,
)
from .modring import Modulus, NonInvertibleError, Residue, is_prime, reduce_rational


@dataclass(frozen=True)
class CoeffVector:
    """Dense coefficients mod a fixed modulus; index i holds the x^i coefficient."""

    coeffs: tuple[int, ...]
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        if any(not 0 <= c < self.modulus for c in self.coeffs):
            raise ValueError("coefficients must be reduced mod the modulus")

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]


def harmonic_poly(
    stride: int, M: int, N: int, modulus: int, length: int
) -> CoeffVector:
    """Coefficients of f(x^stride; M, N) truncated below ``length``.

    Slot stride*k holds k^(-1) mod ``modulus`` for 1 <= k <= M*N with
    gcd(k, N) = 1; all other slots are 0.  Every prime factor of ``modulus``
    must divide N, which makes each retained k invertible; a violation
    raises NonInvertibleError.
    """
    if min(stride, M, N) < 1:
        raise ValueError("stride, M and N must be positive")
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    coeffs = [0] * length
    for k in range(1, M * N + 1):
        pos = stride * k
        if pos >= length:
            break
        if gcd(k, N) != 1:
            continue
        try:
            coeffs[pos] = pow(k, -1, modulus)
        except ValueError as exc:
            raise NonInvertibleError(
                f"term 1/{k} is not invertible mod {modulus}"
            ) from exc
    return CoeffVector(tuple(coeffs), modulus)


def convolve(u: CoeffVector, v: CoeffVector, length: int) -> CoeffVector:
    """Truncated Cauchy product of u and v mod their common modulus.

    Runs the schoolbook product through int64 numpy when every coefficient
    bucket provably fits, with an arbitrary-precision fallback otherwise.
    """
    if u.modulus != v.modulus:
        raise ValueError(f"modulus mismatch: {u.modulus} != {v.modulus}")
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    m = u.modulus
    if (m - 1) ** 2 * max(1, min(len(u), len(v))) < 2**62:
        full = np.convolve(
            np.asarray(u.coeffs, dtype=np.int64), np.asarray(v.coeffs, dtype=np.int64)
        )
        out = [int(c) % m for c in full[:length]]
        out.extend([0] * (length - len(out)))
    else:
        out = [0] * length
        for i, ui in enumerate(u.coeffs[:length]):
            if ui == 0:
                continue
            for j, vj in enumerate(v.coeffs[: length - i]):
                if vj:
                    out[i + j] = (out[i + j] + ui * vj) % m
    return CoeffVector(tuple(out), m)


def _triple_product(
    w: WeightTriple, N: int, modulus: int, length: int
) -> CoeffVector:
    fs = [harmonic_poly(a, w.A // a, N, modulus, length) for a in w.weights]
    return convolve(convolve(fs[0], fs[1], length), fs[2], length)


def extract_triple_coefficient(w: WeightTriple, n: int, modulus: Modulus) -> Residue:
    """[x^(An)] of the product of the three weight polynomials at level n.

    Equal to triple_sum_bruteforce on the same instance: the x^(An)
    coefficient enumerates exactly the solutions of a1*i + a2*j + a3*k = An
    with gcd(ijk, n) = 1.
    """
    if n < 1 or n % modulus.p != 0:
        raise ValueError(f"p={modulus.p} must divide n={n}")
    if any(a % modulus.p == 0 for a in w.weights):
        raise ValueError(f"p={modulus.p} divides one of the weights {w.weights}")
    length = w.A * n + 1
    prod = _triple_product(w, n, modulus.m, length)
    return Residue(prod[w.A * n], modulus.m)


def check_reflection(w: WeightTriple, N: int) -> bool:
    """Three facts about the triple product at level N, checked mod N.

    (i) no constant term, (ii) degree < 3*A*N, (iii) the coefficient at
    2AN is congruent to minus the coefficient at AN mod N.  Composite N is
    handled per prime-power factor, which is CRT-equivalent to mod N.
    """
    AN = w.A * N
    # exact degree: leading coefficients are units, so factor degrees add
    degree = 0
    for a in w.weights:
        top = (w.A // a) * N
        while gcd(top, N) != 1:
            top -= 1
        degree += a * top
    ok = degree < 3 * AN
    length = 2 * AN + 1
    for q, e in factorize(N):
        qe = q**e
        prod = _triple_product(w, N, qe, length)
        ok = ok and prod[0] == 0 and (prod[2 * AN] + prod[AN]) % qe == 0
    return ok


def check_shift_lemma(L: int, M: int, N: int) -> bool:
    """f(x; L*M, N) == (1 + x^(MN) + ... + x^((L-1)MN)) * f(x; M, N) mod N.

    Coefficientwise congruence, checked per prime-power factor of N.
    """
    if min(L, M, N) < 1:
        raise ValueError("L, M and N must be positive")
    length = L * M * N + 1
    for q, e in factorize(N):
        qe = q**e
        lhs = harmonic_poly(1, L * M, N, qe, length)
        base = harmonic_poly(1, M, N, qe, length)
        rhs = [0] * length
        for ell in range(L):
            off = ell * M * N
            for pos in range(min(M * N + 1, length - off)):
                if base[pos]:
                    rhs[off + pos] = (rhs[off + pos] + base[pos]) % qe
        if list(lhs.coeffs) != rhs:
            return False
    return True


def check_induction_step(
    w: WeightTriple, n: int, p: int, r: int, q: int, s: int
) -> VerificationReport:
    """Compare the triple sum at level q^s * n against
    q^s * (1 - 2/q)(1 - 1/q^3) times the triple sum at level n, mod p^r."""
    t0 = time.perf_counter()
    if not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    if n % q == 0:
        raise ValueError(f"q={q} must not divide n={n}")
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    modulus = Modulus(p, r)
    if n % modulus.m != 0 or (n // modulus.m) % p == 0:
        raise ValueError(f"p^r = {p}^{r} must exactly divide n = {n}")
    lifted = triple_sum_bruteforce(w, q**s * n, modulus)
    base = triple_sum_bruteforce(w, n, modulus)
    factor = Fraction(q**s) * (1 - Fraction(2, q)) * (1 - Fraction(1, q**3))
    rhs = Residue(
        reduce_rational(factor, p, r).value * base.value % modulus.m, modulus.m
    )
    return VerificationReport(
        label="induction-step",
        params={"p": p, "r": r, "n": n, "a": list(w.weights), "A": w.A, "q": q, "s": s},
        lhs=lifted,
        rhs=rhs,
        match=lifted == rhs,
        elapsed=time.perf_counter() - t0,
    )


# the eight sign/scale patterns: which slots take the lifted-stride factor
_EIGHT_PARTS = (
    (0, 0, 0),
    (1, 0, 0),
    (0, 1, 0),
    (0, 0, 1),
    (1, 1, 0),
    (1, 0, 1),
    (0, 1, 1),
    (1, 1, 1),
)


def eight_part_decomposition(
    w: WeightTriple, n: int, q: int, modulus: Modulus
) -> list[Residue]:
    """The eight x^(Aqn) coefficients from expanding
    prod_i ( f(x^(a_i); (A/a_i)q, n) - (1/q) f(x^(a_i q); A/a_i, n) ).

    Part j picks the lifted-stride factor in the slots marked by the j-th
    sign pattern; each picked factor contributes a factor -q^(-1) mod p^r.
    The sum of the eight coefficients reproduces the level-qn triple sum.
    """
    if not is_prime(q) or n % q == 0:
        raise ValueError(f"q must be a prime not dividing n, got q={q}, n={n}")
    if any(a % modulus.p == 0 for a in w.weights):
        raise ValueError(f"p={modulus.p} divides one of the weights {w.weights}")
    m = modulus.m
    target = w.A * q * n
    length = target + 1
    plain = [harmonic_poly(a, (w.A // a) * q, n, m, length) for a in w.weights]
    lifted = [harmonic_poly(a * q, w.A // a, n, m, length) for a in w.weights]
    choices = (plain, lifted)
    pair = {
        (b1, b2): convolve(choices[b1][0], choices[b2][1], length)
        for b1 in (0, 1)
        for b2 in (0, 1)
    }
    inv_q = pow(q, -1, m)
    out = []
    for b1, b2, b3 in _EIGHT_PARTS:
        coeff = convolve(pair[(b1, b2)], choices[b3][2], length)[target]
        picks = b1 + b2 + b3
        val = coeff * pow(inv_q, picks, m) % m
        if picks % 2:
            val = -val % m
        out.append(Residue(val, m))
    return out
