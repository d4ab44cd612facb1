from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from congruence_lab.modring import (
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

ODD_PRIMES = [3, 5, 7, 11, 13]


class TestModInverse:
    @pytest.mark.parametrize("a,m,want", [(3, 5, 2), (1, 9, 1), (4, 9, 7)])
    def test_examples(self, a, m, want):
        # exhaustive-search oracle over all residues
        oracle = next(v for v in range(m) if a * v % m == 1)
        assert oracle == want
        res = mod_inverse(a, m)
        assert res == Residue(want, m)

    def test_non_invertible(self):
        with pytest.raises(NonInvertibleError):
            mod_inverse(6, 9)
        with pytest.raises(NonInvertibleError):
            mod_inverse(0, 7)

    def test_small_modulus_rejected(self):
        with pytest.raises(ValueError):
            mod_inverse(1, 1)

    @settings(derandomize=True, max_examples=200)
    @given(a=st.integers(-500, 500), p=st.sampled_from(ODD_PRIMES), e=st.integers(1, 3))
    def test_involution(self, a, p, e):
        m = p**e
        if a % p == 0:
            return
        v = mod_inverse(a, m).value
        assert mod_inverse(v, m).value == a % m


class TestPValuation:
    @pytest.mark.parametrize("x,p,want", [(45, 3, 2), (7, 5, 0), (250, 5, 3)])
    def test_examples(self, x, p, want):
        # repeated-division oracle
        y, e = abs(x), 0
        while y % p == 0:
            y //= p
            e += 1
        assert e == want
        assert p_valuation(x, p) == want

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            p_valuation(0, 5)

    @settings(derandomize=True, max_examples=200)
    @given(
        x=st.integers(-(10**6), 10**6).filter(lambda v: v != 0),
        y=st.integers(1, 10**6),
        p=st.sampled_from(ODD_PRIMES),
    )
    def test_additive(self, x, y, p):
        assert p_valuation(x * y, p) == p_valuation(x, p) + p_valuation(y, p)


class TestNormalize:
    @pytest.mark.parametrize(
        "num,den,want",
        [(6, 4, Fraction(3, 2)), (-5, -10, Fraction(1, 2)), (39, 28, Fraction(39, 28))],
    )
    def test_examples(self, num, den, want):
        q = normalize(num, den)
        assert q == want
        assert q.denominator > 0
        from math import gcd

        assert gcd(q.numerator, q.denominator) == 1

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            normalize(1, 0)

    @settings(derandomize=True, max_examples=200)
    @given(num=st.integers(-1000, 1000), den=st.integers(-1000, 1000).filter(bool))
    def test_idempotent(self, num, den):
        q = normalize(num, den)
        assert normalize(q.numerator, q.denominator) == q


class TestReduceRational:
    @pytest.mark.parametrize(
        "q,p,e,want",
        [
            (Fraction(7, 4), 5, 1, 3),
            (Fraction(0, 1), 5, 1, 0),
            (Fraction(5, 4), 3, 2, 8),
        ],
    )
    def test_examples(self, q, p, e, want):
        res = reduce_rational(q, p, e)
        assert res.value == want
        assert res.modulus == p**e
        # the defining congruence: value * den = num (mod p^e)
        assert (res.value * q.denominator - q.numerator) % p**e == 0

    def test_p_in_denominator(self):
        with pytest.raises(NotPAdicIntegerError):
            reduce_rational(Fraction(1, 3), 3, 2)
        with pytest.raises(NotPAdicIntegerError):
            reduce_rational(Fraction(7, 50), 5)

    def test_p_in_numerator_is_honest_zero(self):
        assert reduce_rational(Fraction(5, 4), 5, 1).value == 0
        assert reduce_rational(Fraction(25, 3), 5, 2).value == 0

    @settings(derandomize=True, max_examples=200)
    @given(
        n1=st.integers(-60, 60),
        n2=st.integers(-60, 60),
        d1=st.integers(1, 60),
        d2=st.integers(1, 60),
        p=st.sampled_from(ODD_PRIMES),
        e=st.integers(1, 3),
    )
    def test_ring_homomorphism(self, n1, n2, d1, d2, p, e):
        if d1 % p == 0 or d2 % p == 0:
            return
        q1, q2 = Fraction(n1, d1), Fraction(n2, d2)
        m = p**e
        r1, r2 = reduce_rational(q1, p, e).value, reduce_rational(q2, p, e).value
        assert reduce_rational(q1 + q2, p, e).value == (r1 + r2) % m
        assert reduce_rational(q1 * q2, p, e).value == (r1 * r2) % m


class TestModulus:
    def test_caches_power(self):
        mod = Modulus(3, 4)
        assert mod.m == 81
        assert mod.reduce(Fraction(5, 4)).value == 5 * pow(4, -1, 81) % 81

    @pytest.mark.parametrize("p,r", [(2, 1), (4, 1), (9, 2), (1, 1), (3, 0)])
    def test_rejects_bad_parameters(self, p, r):
        with pytest.raises(ValueError):
            Modulus(p, r)


class TestResidue:
    def test_bounds_checked(self):
        with pytest.raises(ValueError):
            Residue(5, 5)
        with pytest.raises(ValueError):
            Residue(-1, 5)
        assert int(Residue(3, 5)) == 3


def test_is_prime_small():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
