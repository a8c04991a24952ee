"""Dual-mode scalar arithmetic.

Every quantity in this package is either exact (python Fraction, with int
accepted and normalized) or floating point.  Operations stay generic over the
mode; the helpers here are the only place the two modes are told apart.
"""

import math
from fractions import Fraction

DEFAULT_TOL = 1e-9

EXACT = "exact"
FLOAT = "float"


class ExactnessError(ArithmeticError):
    """Raised when a result is irrational but exact arithmetic was requested."""


def is_exact(x):
    return isinstance(x, (Fraction, int)) and not isinstance(x, bool)


def all_exact(values):
    return all(is_exact(x) for x in values)


def mode_of(values):
    return EXACT if all_exact(values) else FLOAT


def coerce(x, mode):
    """Normalize one scalar to the requested mode.

    Exact mode accepts ints, Fractions and p/q strings; floats are rejected
    rather than silently rationalized.
    """
    if mode == EXACT:
        if isinstance(x, float):
            raise ExactnessError(f"float {x!r} not accepted in exact mode")
        return Fraction(x)
    return float(x)


def coerce_row(values, mode):
    return tuple(coerce(x, mode) for x in values)


def rational_sqrt(q):
    """Square root of a nonnegative Fraction, or None if irrational."""
    q = Fraction(q)
    if q < 0:
        return None
    num = math.isqrt(q.numerator)
    den = math.isqrt(q.denominator)
    if num * num == q.numerator and den * den == q.denominator:
        return Fraction(num, den)
    return None


def sqrt_scalar(x):
    """Mode-aware square root.

    For exact input the root must itself be rational, otherwise
    ExactnessError is raised (callers fall back to float mode explicitly).
    """
    if x < 0:
        raise ValueError(f"sqrt({x}) of a negative scalar")
    if is_exact(x):
        root = rational_sqrt(Fraction(x))
        if root is None:
            raise ExactnessError(f"sqrt({x}) is irrational; use float mode")
        return root
    return math.sqrt(x)


def near(x, y, tol=DEFAULT_TOL):
    """Equality up to tol, exact equality when both sides are exact."""
    if is_exact(x) and is_exact(y):
        return x == y
    return abs(x - y) <= tol
