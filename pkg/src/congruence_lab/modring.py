"""Exact arithmetic over Z/p^e for odd prime powers p^e.

Fractions are stdlib ``fractions.Fraction`` values (always in lowest terms,
positive denominator); residues are plain integers paired with their modulus.
Downstream congruence checks use auxiliary moduli up to p^(2r+2), so nothing
here assumes machine word width.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


class NonInvertibleError(ArithmeticError):
    """Raised when an element shares a factor with the modulus."""


class NotPAdicIntegerError(ArithmeticError):
    """Raised when a rational has p in its reduced denominator, so no residue
    mod p^e exists."""


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test for desk-scale inputs."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Modulus:
    """An odd prime power p^r with the value p^r cached in ``m``."""

    p: int
    r: int
    m: int = field(init=False)

    def __post_init__(self) -> None:
        if self.p < 3 or self.p % 2 == 0 or not is_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.r < 1:
            raise ValueError(f"r must be >= 1, got {self.r}")
        object.__setattr__(self, "m", self.p**self.r)

    def reduce(self, q: Fraction | int) -> "Residue":
        """Reduce a p-adically integral rational into Z/p^r."""
        return reduce_rational(q, self.p, self.r)


@dataclass(frozen=True)
class Residue:
    """An integer in [0, modulus)."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            raise ValueError(f"{self.value} is not reduced mod {self.modulus}")

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return f"{self.value} (mod {self.modulus})"


def mod_inverse(a: int, modulus: int) -> Residue:
    """The residue v with a*v = 1 (mod modulus).

    Raises NonInvertibleError when gcd(a, modulus) != 1.
    """
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    try:
        return Residue(pow(a, -1, modulus), modulus)
    except ValueError as exc:
        raise NonInvertibleError(f"{a} is not invertible mod {modulus}") from exc


def p_valuation(x: int, p: int) -> int:
    """Largest e with p^e | x, for nonzero x."""
    if x == 0:
        raise ValueError("p-adic valuation of 0 is undefined")
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    x = abs(x)
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e


def normalize(num: int, den: int = 1) -> Fraction:
    """num/den as an exact fraction in lowest terms with positive denominator."""
    return Fraction(num, den)


def reduce_rational(q: Fraction | int, p: int, e: int = 1) -> Residue:
    """Reduce the rational q into Z/p^e as num * den^(-1) mod p^e.

    Requires the reduced denominator to be coprime to p; a p in the
    denominator raises NotPAdicIntegerError.  A p in the numerator is fine
    and simply yields a residue divisible by p (possibly 0).
    """
    q = Fraction(q)
    if q.denominator % p == 0:
        raise NotPAdicIntegerError(
            f"{q} is not a {p}-adic integer (denominator divisible by {p})"
        )
    m = p**e
    if m == 1:
        return Residue(0, 1)
    value = q.numerator * pow(q.denominator, -1, m) % m
    return Residue(value, m)
