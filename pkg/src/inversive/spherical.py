"""Spherical caps on the unit n-sphere.

A cap with unit center y and angular radius alpha in (0, pi) has coordinate
row

    w+ = (cot alpha, y_0/sin alpha, ..., y_n/sin alpha)

and the Lorentz-like form J = diag(-1, 1, ..., 1) plays the role the
tangency form plays in the plane: w+ J w+ = 1 for every cap, and two caps
are externally tangent exactly when the product is -1.

Exactness lives at the row level.  A rational cot alpha almost always comes
with an irrational sin alpha, so exact caps carry their rational row and the
radian/center view is derived (and approximate) rather than stored.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from . import forms, linalg
from .scalars import (DEFAULT_TOL, EXACT, coerce_row, mode_of, near)


@dataclass(frozen=True)
class SphericalCap:
    """Cap on the unit sphere; row is the optional exact coordinate backing."""

    center: tuple
    angular_radius: float
    row: tuple = None

    def __post_init__(self):
        object.__setattr__(self, "center", tuple(self.center))
        if not 0 < self.angular_radius < math.pi:
            raise ValueError("angular radius must lie in (0, pi)")
        norm2 = sum(float(y) * float(y) for y in self.center)
        if not near(norm2, 1, 1e-9):
            raise ValueError("cap center must be a unit vector")

    @property
    def n(self):
        return len(self.center) - 1

    @property
    def cot(self):
        """Exact when row-backed, float otherwise."""
        if self.row is not None:
            return self.row[0]
        return math.cos(self.angular_radius) / math.sin(self.angular_radius)


@dataclass(frozen=True)
class CapLinearForm:
    """Halfspace condition f_vec . y >= f cutting a cap out of the sphere."""

    f_vec: tuple
    f: object

    def __post_init__(self):
        object.__setattr__(self, "f_vec", tuple(self.f_vec))
        norm2 = sum(float(x) * float(x) for x in self.f_vec)
        if not near(norm2, 1, 1e-9):
            raise ValueError("linear form vector must be a unit vector")
        if not abs(float(self.f)) < 1:
            raise ValueError("constant term must satisfy |f| < 1; the "
                             "intersection is empty or degenerate otherwise")


def cap_coords(cap):
    """Coordinate row (cot alpha, y/sin alpha) of a cap."""
    if cap.row is not None:
        return forms.CoordRow(forms.SPHERICAL, cap.row)
    s = math.sin(cap.angular_radius)
    c = math.cos(cap.angular_radius)
    entries = (c / s,) + tuple(float(y) / s for y in cap.center)
    return forms.CoordRow(forms.SPHERICAL, entries)


def cap_from_coords(row, tol=DEFAULT_TOL):
    """Cap encoded by a coordinate row.

    The validity product row J row = 1 pins down sin alpha, so the row
    determines a unique alpha in (0, pi) and a unit center.  Exact rows are
    kept as the cap's backing so cot alpha stays rational.
    """
    entries = row.entries if isinstance(row, forms.CoordRow) else tuple(row)
    self_product = forms.pair_product(forms.SPHERICAL, entries, entries)
    if not near(self_product, 1, tol):
        raise ValueError(f"not a valid cap row, self product {self_product}")
    c = float(entries[0])
    alpha = math.atan2(1.0, c)
    s = math.sin(alpha)
    center = tuple(float(q) * s for q in entries[1:])
    backing = entries if mode_of(entries) == EXACT else None
    return SphericalCap(center, alpha, row=backing)


def cap_pair_product(row1, row2):
    """J-product of two spherical rows; -1 on externally tangent pairs."""
    for r in (row1, row2):
        if isinstance(r, forms.CoordRow) and r.kind != forms.SPHERICAL:
            raise ValueError(f"expected spherical rows, got {r.kind}")
    return forms.pair_product(forms.SPHERICAL, row1, row2)


def cap_from_linear_form(form):
    """Cap {y : f_vec . y >= f}: center f_vec, angular radius arccos(f)."""
    alpha = math.acos(float(form.f))
    return SphericalCap(tuple(float(x) for x in form.f_vec), alpha)


def complementary_cap(cap):
    """The closure of the cap's complement; angular radii sum to pi."""
    center = tuple(-y for y in cap.center)
    backing = None if cap.row is None else tuple(-x for x in cap.row)
    return SphericalCap(center, math.pi - cap.angular_radius, row=backing)


def spherical_soddy_check(cots):
    """Residual of the bend relation on a vector of cot(alpha) values;
    zero for n+2 pairwise tangent caps."""
    cots = tuple(cots)
    n = len(cots) - 2
    if n < 1:
        raise ValueError("need at least 3 values")
    total = sum(cots)
    square_sum = sum(c * c for c in cots)
    if mode_of(cots) == EXACT:
        return square_sum - Fraction(1, n) * total * total + 2
    return square_sum - (total * total) / n + 2


def realize_cap_config(cots, n=None):
    """One configuration of pairwise tangent caps with the given cot values.

    Rows are found sequentially: the first tail is (1, c_1, 0, ..., 0) and
    each later tail solves the linear tangency conditions against the
    earlier rows plus its own quadratic norm condition.  With rational cots
    the search sticks to rational tails and raises if none of its candidate
    branches closes, so a returned matrix is exact whenever the input is.
    """
    cots = tuple(cots)
    if n is None:
        n = len(cots) - 2
    if len(cots) != n + 2:
        raise ValueError("need n+2 cot values")
    mode = mode_of(cots)
    exact = mode == EXACT
    cots = coerce_row(cots, mode)
    residual = spherical_soddy_check(cots)
    if not near(residual, 0, DEFAULT_TOL):
        raise ValueError(f"cot values violate the bend relation by {residual}")
    signs = (1,) * (n + 1)
    one = Fraction(1) if exact else 1.0
    zero = one - one
    first = (one, cots[0] * one) + (zero,) * (n - 1)
    tails = linalg.realize_tails(
        [first], signs,
        pair_value=lambda j, i: cots[i] * cots[j] - 1,
        self_value=lambda i: 1 + cots[i] * cots[i],
        count=n + 2, exact=exact)
    if tails is None:
        raise ValueError("no realization found for these cot values")
    entry_rows = [(cots[i],) + tuple(tails[i]) for i in range(n + 2)]
    return forms.ConfigMatrix.from_rows(forms.SPHERICAL, entry_rows, mode=mode)
