"""The reciprocal-sum lemma and the two tangle boundary slope families.

Solutions of -1/a + 1/b + 1/c = 0 in integers 1 <= a < b <= c are
exactly the triples

    a = k(l-k)d,  b = l(l-k)d,  c = kld

with gcd(k, l) = 1, k < l <= 2k and d >= 1; for a >= 2 the parameters
(k, l, d) are unique.  l = 2k forces (k, l) = (1, 2) and gives the twin
family (d, 2d, 2d); l = k + 1 gives (kd, (k+1)d, k(k+1)d).

A twist region with m crossings meets a candidate surface either in
parallel disks of boundary slope 1/m (type A) or in a single disk of
boundary slope 1/(m+1) (type B).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd

from .errors import (
    DegenerateSlopeError,
    DegenerateTangleError,
    InvalidParameterError,
    InvariantError,
)

__all__ = [
    "SlopeCondition",
    "LemmaSolution",
    "parametrize",
    "enumerate_solutions",
    "brute_force_solutions",
    "type_a_slope",
    "type_b_slope",
    "slope_condition",
]


class SlopeCondition(Enum):
    """Which slope equation a boundary fraction a/b satisfies for m."""

    CONDITION_I = "I"      # a*m == b - 1
    CONDITION_II = "II"    # a > 1 and a*m == b + 1
    NONE = "none"


@dataclass(frozen=True)
class LemmaSolution:
    """One solution triple together with its parametrization."""

    a: int
    b: int
    c: int
    k: int
    l: int
    d: int

    def __post_init__(self):
        if parametrize(self.k, self.l, self.d) != (self.a, self.b, self.c):
            raise InvariantError(
                f"({self.a},{self.b},{self.c}) does not match "
                f"k={self.k} l={self.l} d={self.d}"
            )


def parametrize(k: int, l: int, d: int) -> tuple[int, int, int]:
    """Solution triple (a, b, c) for parameters (k, l, d)."""
    if k < 1 or d < 1:
        raise InvalidParameterError(f"k and d must be positive, got k={k} d={d}")
    if not k < l <= 2 * k:
        raise InvalidParameterError(f"need k < l <= 2k, got k={k} l={l}")
    if gcd(k, l) != 1:
        raise InvalidParameterError(f"k={k} and l={l} are not coprime")
    return (k * (l - k) * d, l * (l - k) * d, k * l * d)


def enumerate_solutions(max_c: int) -> list[LemmaSolution]:
    """All solutions with c <= max_c, via the parametrization.

    Sorted by (a, b, c).  The parametrization is injective for a >= 2
    and the twin family is covered once by (k, l) = (1, 2), so no
    deduplication is needed.
    """
    solutions = []
    k = 1
    # smallest c for a given k is k(k+1) via l = k+1, d = 1
    while k * (k + 1) <= max_c:
        for l in range(k + 1, 2 * k + 1):
            if gcd(k, l) != 1:
                continue
            base = k * l
            for d in range(1, max_c // base + 1):
                a, b, c = parametrize(k, l, d)
                solutions.append(LemmaSolution(a, b, c, k, l, d))
        k += 1
    solutions.sort(key=lambda s: (s.a, s.b, s.c))
    return solutions


def brute_force_solutions(max_c: int) -> list[tuple[int, int, int]]:
    """All solutions with c <= max_c by direct scan, no parametrization.

    For each pair a < b the equation forces c = ab/(b-a); the pair
    contributes exactly when that is an integer in [b, max_c].  Serves
    as an independent oracle for enumerate_solutions.
    """
    solutions = []
    for a in range(1, max_c + 1):
        for b in range(a + 1, max_c + 1):
            if (a * b) % (b - a):
                continue
            c = (a * b) // (b - a)
            if b <= c <= max_c:
                solutions.append((a, b, c))
    return solutions


def type_a_slope(m: int) -> Fraction:
    """Boundary slope 1/m of the parallel-disk family in an m-twist region."""
    if m == 0:
        raise DegenerateTangleError("twist count zero has no boundary slope")
    return Fraction(1, m)


def type_b_slope(m: int) -> Fraction:
    """Boundary slope 1/(m+1) of the single-disk family in an m-twist region."""
    if m == 0:
        raise DegenerateTangleError("twist count zero has no boundary slope")
    if m == -1:
        raise DegenerateSlopeError("slope 1/(m+1) is undefined for m = -1")
    return Fraction(1, m + 1)


def slope_condition(m: int, boundary: Fraction) -> SlopeCondition:
    """Classify a boundary fraction a/b against the m-twist slope equations.

    Condition I is a*m == b - 1 and condition II is a*m == b + 1 with
    a > 1; a numerator of 1 can only satisfy condition I.
    """
    a, b = boundary.numerator, boundary.denominator
    if a * m == b - 1:
        return SlopeCondition.CONDITION_I
    if a > 1 and a * m == b + 1:
        return SlopeCondition.CONDITION_II
    return SlopeCondition.NONE
