"""Direct numerical checks of the supporting congruences behind the main
harmonic-sum identity: inverse sums over arithmetic progressions, double sums
tied by a residue condition, the partial-sum ladder U(s; u, p^r), the paired
sum over k * h(k), and the floor-weighted and inverse-power variants.

Each check computes its sum honestly (term by term) and compares against the
stated closed form at the stated prime power, returning either the raw
residue or a LemmaInstance record with both sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .bernoulli import bernoulli_exact
from .modring import Residue, is_prime, p_valuation, reduce_rational


@dataclass
class LemmaInstance:
    """One checked congruence: computed vs expected residue at a modulus."""

    lemma: str
    params: dict
    computed: int
    expected: int
    modulus: int
    match: bool


def _instance(lemma: str, params: dict, computed: int, expected: int, modulus: int) -> LemmaInstance:
    return LemmaInstance(lemma, params, computed, expected, modulus, computed == expected)


def _require_odd_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")


def _bern(p: int) -> Fraction:
    return bernoulli_exact(p - 3)[p - 3]


def arith_prog_inverse_sum(u: int, m: int, ell: int, p: int, r: int) -> Residue:
    """Sum of i^(-1) mod p^r over 1 <= i <= u*m*p^r with i = ell (mod m) and
    gcd(i, p) = 1.  The congruence asserts this is always 0."""
    _require_odd_prime(p)
    if u < 1 or m < 1 or r < 1:
        raise ValueError("u, m and r must be positive")
    if m % p == 0:
        raise ValueError(f"p={p} must not divide m={m}")
    mod = p**r
    bound = u * m * mod
    start = ell % m or m
    total = 0
    for i in range(start, bound + 1, m):
        if i % p:
            total = (total + pow(i, -1, mod)) % mod
    return Residue(total, mod)


def double_sum_same_residue(
    a: int, b: int, c: int, u: int, v: int, p: int, r: int
) -> Residue:
    """Sum of (ij)^(-1) mod p^(2r) over i <= u*c*p^r, j <= v*c*p^r with
    a*i = b*j (mod c) and gcd(ij, p) = 1.  The congruence asserts 0."""
    _require_odd_prime(p)
    if min(a, b, c, u, v, r) < 1:
        raise ValueError("a, b, c, u, v and r must be positive")
    if c % p == 0:
        raise ValueError(f"p={p} must not divide c={c}")
    if gcd(a, c) != 1 or gcd(b, c) != 1:
        raise ValueError(f"a={a} and b={b} must be coprime to c={c}")
    mod = p ** (2 * r)
    imax = u * c * p**r
    jmax = v * c * p**r
    inv = [pow(x, -1, mod) if x % p else 0 for x in range(jmax + 1)]
    b_inv_c = pow(b, -1, c) if c > 1 else 0
    total = 0
    for i in range(1, imax + 1):
        if i % p == 0:
            continue
        inv_i = inv[i] if i <= jmax else pow(i, -1, mod)
        j0 = (b_inv_c * a * i) % c or c
        for j in range(j0, jmax + 1, c):
            if j % p:
                total = (total + inv_i * inv[j]) % mod
    return Residue(total, mod)


@lru_cache(maxsize=None)
def compute_U(s: int, u: int, p: int, r: int) -> Fraction:
    """U(s; u, p^r) = sum_{k=0}^{u*p^(r-1) - 1} 1/(kp + s), exact.

    Requires p not dividing s, which also rules out a zero denominator.  The
    reduced denominator is always coprime to p (each term's denominator is
    congruent to s mod p).
    """
    _require_odd_prime(p)
    if u < 1 or r < 1:
        raise ValueError("u and r must be positive")
    if s % p == 0:
        raise ValueError(f"p={p} must not divide s={s}")
    return sum(Fraction(1, k * p + s) for k in range(u * p ** (r - 1)))


def check_U_congruences(
    s: int, t: int, u: int, v: int, p: int, r: int
) -> list[LemmaInstance]:
    """The four ladder congruences for U(s; u, p^r).

    (a) the lift U(s;u,p^(r+1)) vs p*U(s;u,p^r), mod p^2 for r=1 and mod
        p^(r+2) for r>=2;
    (b) divisibility of U(s;u,p^r) by p^(r-1), phrased as a 0 residue;
    (c) for r>=2, the product lift mod p^(2r+2);
    (d) for r>=2, the explicit closed form of the product mod p^(2r), with
        separate shapes for p=3 and p>=5.
    """
    params = {"s": s, "t": t, "u": u, "v": v, "p": p, "r": r}
    out = []

    e_a = 2 if r == 1 else r + 2
    lift = reduce_rational(compute_U(s, u, p, r + 1), p, e_a).value
    scaled = reduce_rational(p * compute_U(s, u, p, r), p, e_a).value
    out.append(_instance("U.a", params, lift, scaled, p**e_a))

    if r == 1:
        out.append(_instance("U.b", params, 0, 0, 1))
    else:
        val = reduce_rational(compute_U(s, u, p, r), p, r - 1).value
        out.append(_instance("U.b", params, val, 0, p ** (r - 1)))

    if r >= 2:
        e_c = 2 * r + 2
        prod_hi = compute_U(s, u, p, r + 1) * compute_U(t, v, p, r + 1)
        prod_lo = compute_U(s, u, p, r) * compute_U(t, v, p, r)
        out.append(
            _instance(
                "U.c",
                params,
                reduce_rational(prod_hi, p, e_c).value,
                reduce_rational(p * p * prod_lo, p, e_c).value,
                p**e_c,
            )
        )

        e_d = 2 * r
        if p == 3:
            closed = Fraction(u * v, s * t) * p ** (2 * r - 2) + (
                Fraction(u * v * (t + 1), s * t**3)
                + Fraction(u * v * (s + 1), s**3 * t)
            ) / 2 * p ** (2 * r - 1)
        else:
            closed = Fraction(u * v, s * t) * p ** (2 * r - 2) + (
                Fraction(u * v, s * t**2) + Fraction(u * v, s**2 * t)
            ) / 2 * p ** (2 * r - 1)
        out.append(
            _instance(
                "U.d",
                params,
                reduce_rational(prod_lo, p, e_d).value,
                reduce_rational(closed, p, e_d).value,
                p**e_d,
            )
        )
    return out


def u_valuation_gap(s: int, u: int, p: int, r: int) -> int:
    """p-adic valuation of U(s; u, p^r): v_p(numerator) - v_p(denominator).

    The ladder congruence (b) asserts this is at least r - 1.
    """
    q = compute_U(s, u, p, r)
    if q == 0:
        raise ValueError("valuation of a zero sum is undefined")
    return p_valuation(q.numerator, p) - p_valuation(q.denominator, p)


def h_of_k(k: int, a: int, c: int, p: int) -> int:
    """The unique h in [1, c*p - 1] with h = a*k (mod c*p)."""
    _require_odd_prime(p)
    if k < 1 or gcd(k, p) != 1:
        raise ValueError(f"k={k} must be positive and coprime to p={p}")
    if c < 1 or c % p == 0:
        raise ValueError(f"c={c} must be positive and not divisible by p={p}")
    if gcd(a, c * p) != 1:
        raise ValueError(f"a={a} must be coprime to c*p={c * p}")
    h = (a * k) % (c * p)
    assert h != 0  # would need p | a*k, impossible here
    return h


def hk_pair_sum(a: int, c: int, p: int) -> LemmaInstance:
    """Sum over k < c*p with gcd(k, p) = 1 of 1/(k * h(k)) mod p^2, against
    -c/a^3 for p = 3 and c*(a^2+1)/(3a) * p * B_{p-3} for p >= 5."""
    total = Fraction(0)
    for k in range(1, c * p):
        if k % p:
            total += Fraction(1, k * h_of_k(k, a, c, p))
    if p == 3:
        closed = Fraction(-c, a**3)
    else:
        closed = Fraction(c * (a * a + 1), 3 * a) * p * _bern(p)
    return _instance(
        "hk-pair",
        {"a": a, "c": c, "p": p},
        reduce_rational(total, p, 2).value,
        reduce_rational(closed, p, 2).value,
        p * p,
    )


def double_sum_mod_cp(
    a: int, b: int, c: int, u: int, v: int, p: int, r: int
) -> LemmaInstance:
    """Sum of (ij)^(-1) mod p^(2r) over i <= u*c*p^r, j <= v*c*p^r with
    a*i = b*j (mod c*p) and gcd(ij, p) = 1, against the closed form
    -uv*a^3*b^3*c (p=3, r=1), -3^(2r-2)*uv*(a^3*b^3*c + 3abc) (p=3, r>=2),
    or p^(2r-1)*B_{p-3}*uvc*(a^2+b^2)/(3ab) (p>=5)."""
    _require_odd_prime(p)
    if min(a, b, c, u, v, r) < 1:
        raise ValueError("a, b, c, u, v and r must be positive")
    if a % p == 0 or b % p == 0 or c % p == 0:
        raise ValueError(f"p={p} must divide none of a={a}, b={b}, c={c}")
    if gcd(a, c) != 1 or gcd(b, c) != 1:
        raise ValueError(f"a={a} and b={b} must be coprime to c={c}")
    mod = p ** (2 * r)
    cp = c * p
    imax = u * c * p**r
    jmax = v * c * p**r
    inv = [pow(x, -1, mod) if x % p else 0 for x in range(jmax + 1)]
    b_inv = pow(b, -1, cp)
    total = 0
    for i in range(1, imax + 1):
        if i % p == 0:
            continue
        inv_i = inv[i] if i <= jmax else pow(i, -1, mod)
        j0 = (b_inv * a * i) % cp  # never 0: that would need p | a*i
        for j in range(j0, jmax + 1, cp):
            total = (total + inv_i * inv[j]) % mod
    if p == 3:
        if r == 1:
            closed = Fraction(-u * v * a**3 * b**3 * c)
        else:
            closed = Fraction(-(3 ** (2 * r - 2)) * u * v * (a**3 * b**3 * c + 3 * a * b * c))
    else:
        closed = p ** (2 * r - 1) * _bern(p) * Fraction(u * v * c * (a * a + b * b), 3 * a * b)
    return _instance(
        "mod-cp",
        {"a": a, "b": b, "c": c, "u": u, "v": v, "p": p, "r": r},
        total,
        reduce_rational(closed, p, 2 * r).value,
        mod,
    )


def floor_weighted_sum(a: int, c: int, p: int) -> LemmaInstance:
    """Floor-weighted power sums over k < c*p with gcd(k, p) = 1.

    For p >= 5: sum of k^(p-4) * floor(a*k/(c*p)) mod p against
    (a^3 - a)/3 * B_{p-3}.  For p = 3: sum of k * floor(a*k/(3c)) mod 3
    against (a^2 - 1)/(12a).
    """
    _require_odd_prime(p)
    if c < 1 or c % p == 0:
        raise ValueError(f"c={c} must be positive and not divisible by p={p}")
    if gcd(a, c * p) != 1:
        raise ValueError(f"a={a} must be coprime to c*p={c * p}")
    cp = c * p
    if p >= 5:
        total = sum(pow(k, p - 4, p) * ((a * k) // cp) for k in range(1, cp) if k % p) % p
        closed = Fraction(a**3 - a, 3) * _bern(p)
    else:
        total = sum(k * ((a * k) // cp) for k in range(1, cp) if k % 3) % 3
        closed = Fraction(a * a - 1, 12 * a)
    return _instance(
        "floor-weighted",
        {"a": a, "c": c, "p": p},
        total,
        reduce_rational(closed, p, 1).value,
        p,
    )


def inverse_power_sum(e: int, m: int, p: int, mod_power: int | None = None) -> LemmaInstance:
    """Sum over k < m*p with gcd(k, p) = 1 of k^(-e), at the stated power of p.

    e=2: mod p^2; the value is -m for p = 3 (any m >= 1) and
         (2m/3)*p*B_{p-3} for p >= 5 (m coprime to p).
    e=3: mod p; the value is 0 by the pairing k <-> m*p - k.
    e=4: mod 3 (p = 3 only); the value is -m.
    """
    _require_odd_prime(p)
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if e not in (2, 3, 4):
        raise ValueError(f"unsupported exponent {e}")
    if e == 4 and p != 3:
        raise ValueError("the inverse fourth-power sum is stated for p = 3 only")
    stated = 2 if e == 2 else 1
    if mod_power is None:
        mod_power = stated
    elif mod_power != stated:
        raise ValueError(f"exponent {e} is checked mod p^{stated}, not p^{mod_power}")
    mod = p**mod_power
    total = 0
    for k in range(1, m * p):
        if k % p:
            total = (total + pow(k, -e, mod)) % mod
    if e == 2 and p == 3:
        expected = -m % mod
    elif e == 2:
        if m % p == 0:
            raise ValueError(f"p={p} must not divide m={m} for the square sum")
        expected = reduce_rational(Fraction(2 * m, 3) * p * _bern(p), p, 2).value
    elif e == 3:
        expected = 0
    else:
        expected = -m % 3
    return _instance(
        f"inverse-power-{e}",
        {"e": e, "m": m, "p": p},
        total,
        expected,
        mod,
    )
