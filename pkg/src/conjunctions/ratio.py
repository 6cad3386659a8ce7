"""Exact rational arithmetic.

Periods, angular velocities and alignment periods are all carried as
:class:`fractions.Fraction` values, which are always stored in lowest terms
with a positive denominator and use arbitrary-precision integers.  This
module adds the pieces ``fractions`` does not provide: a validated
constructor, positive-integer gcd/lcm, the least common integer multiple of
two rationals, and the literal format used by the CLI and body files.
"""

from fractions import Fraction
from functools import reduce
import math
import numbers
import re

Ratio = Fraction

_LITERAL = re.compile(r"^[+-]?(\d+(/\d+)?|\d*\.\d+|\d+\.\d*)$")


class RatioParseError(ValueError):
    """Raised for a malformed rational literal; ``token`` holds the input."""

    def __init__(self, token):
        super().__init__(f"malformed rational literal: {token!r}")
        self.token = token


def make(num, den=1):
    """Build a canonical ratio from two integers.

    >>> make(4, 6)
    Fraction(2, 3)
    >>> make(3, -6)
    Fraction(-1, 2)
    """
    if not isinstance(num, numbers.Integral) or not isinstance(den, numbers.Integral):
        raise TypeError("make() takes integer numerator and denominator")
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(int(num), int(den))


def _check_positive_int(*values):
    for v in values:
        if not isinstance(v, numbers.Integral) or v < 1:
            raise ValueError(f"expected a positive integer, got {v!r}")


def gcd_int(a, b):
    _check_positive_int(a, b)
    return math.gcd(a, b)


def lcm_int(a, b):
    _check_positive_int(a, b)
    return math.lcm(a, b)


def lcm_ratio(p, q):
    """Least positive rational that is an integer multiple of both ``p`` and ``q``.

    For ``p = a/b`` and ``q = c/d`` in lowest terms this is
    ``lcm(a, c) / gcd(b, d)``.  Inputs are canonicalised first because the
    identity does not hold for unreduced fractions (``lcm(2/4, 1/2)`` would
    otherwise come out as 2 instead of 1/2).
    """
    p, q = Fraction(p), Fraction(q)
    if p <= 0 or q <= 0:
        raise ValueError(f"lcm_ratio needs positive operands, got {p} and {q}")
    return Fraction(
        lcm_int(p.numerator, q.numerator),
        gcd_int(p.denominator, q.denominator),
    )


def lcm_ratios(values):
    """Fold :func:`lcm_ratio` over a non-empty iterable."""
    values = list(values)
    if not values:
        raise ValueError("lcm_ratios needs at least one value")
    return reduce(lcm_ratio, values)


def parse_ratio(text):
    """Parse ``"num/den"``, an integer or a decimal literal into an exact ratio.

    Decimals are read exactly, so ``"29.46"`` becomes ``1473/50``.
    """
    token = text.strip() if isinstance(text, str) else text
    if not isinstance(token, str) or not _LITERAL.match(token):
        raise RatioParseError(text)
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise RatioParseError(text) from None


def format_ratio(r):
    """``"num/den"``, or a plain integer when the denominator is 1."""
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"
