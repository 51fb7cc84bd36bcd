"""Exact rational arithmetic used by the slope computations.

Everything is integer or Fraction exact; no floats anywhere.  The
continued fraction convention is innermost first: a coefficient list
[c1, c2, ..., cn] evaluates as

    cn + 1/(c(n-1) + 1/(... + 1/c1))

so [2, 3] is 3 + 1/2 = 7/2 and a singleton [c] is the integer c.
Python integers are unbounded, so no overflow handling is needed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ContinuedFractionError, ZeroDenominatorError

__all__ = ["reduce", "cf_to_fraction", "fraction_to_cf", "sum_reciprocals"]


def reduce(numerator: int, denominator: int) -> Fraction:
    """Reduced fraction with positive denominator; zero reduces to 0/1."""
    if denominator == 0:
        raise ZeroDenominatorError(f"denominator is zero in {numerator}/0")
    return Fraction(numerator, denominator)


def cf_to_fraction(coefficients: Sequence[int]) -> Fraction:
    """Evaluate an innermost-first continued fraction exactly.

    Raises ContinuedFractionError for an empty list, and when a partial
    value becomes zero so the next step would divide by zero (for
    example [0, 5], whose inner value 0 cannot be inverted).
    """
    if not coefficients:
        raise ContinuedFractionError("empty coefficient list")
    # Track the value as an integer pair n/d; it stays reduced because
    # gcd(c*n + d, n) = gcd(d, n) and the pair starts out coprime.
    n, d = coefficients[0], 1
    for i, c in enumerate(coefficients[1:], start=1):
        if n == 0:
            raise ContinuedFractionError(
                f"zero partial value before coefficient index {i}"
            )
        n, d = c * n + d, n
    return Fraction(n, d)


def fraction_to_cf(value: Fraction) -> list[int]:
    """Euclidean continued fraction of value, innermost first.

    Uses floor division, so remainders are positive and every
    coefficient after the outermost one is at least 1; the reciprocal
    of an integer expands with a trailing outer 0, e.g. 1/5 -> [5, 0].
    The expansion round-trips through cf_to_fraction exactly.
    """
    quotients = []  # outermost first while running Euclid
    n, d = value.numerator, value.denominator
    while True:
        q, r = divmod(n, d)
        quotients.append(q)
        if r == 0:
            break
        n, d = d, r
    quotients.reverse()
    return quotients


def sum_reciprocals(values: Iterable[int]) -> Fraction:
    """Exact sum of 1/v over the given integers; zero entries are rejected."""
    total = Fraction(0)
    for v in values:
        if v == 0:
            raise ZeroDenominatorError("reciprocal of zero requested")
        total += Fraction(1, v)
    return total
