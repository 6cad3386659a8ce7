"""Brute-force references shared by the tests."""

from fractions import Fraction


def brute_lcm(p, q):
    """Smallest k*p (k = 1, 2, ...) that is also an integer multiple of q."""
    a, b = p.numerator, p.denominator
    c, d = q.numerator, q.denominator
    # k*p / q = k*a*d / (b*c)
    k = 1
    while (k * a * d) % (b * c):
        k += 1
    return Fraction(k * a, b)


def is_integer(x):
    return Fraction(x).denominator == 1
