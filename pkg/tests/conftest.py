from fractions import Fraction
from math import gcd

from congruence_lab.harmonic import WeightTriple


def exact_triple_sum(w: WeightTriple, n: int) -> Fraction:
    """Independent oracle: the triple sum as one exact rational.

    Direct loops, exact fractions, no modular shortcuts; intended for small
    A*n only.
    """
    total = Fraction(0)
    An = w.A * n
    for i in range(1, (An - w.a2 - w.a3) // w.a1 + 1):
        if gcd(i, n) != 1:
            continue
        for j in range(1, (An - w.a1 * i - w.a3) // w.a2 + 1):
            if gcd(j, n) != 1:
                continue
            k, rem = divmod(An - w.a1 * i - w.a2 * j, w.a3)
            if rem == 0 and gcd(k, n) == 1:
                total += Fraction(1, i * j * k)
    return total
