"""Quadratic-form layer shared by all three geometries.

An oriented sphere system in n-space is encoded as a matrix whose rows are
coordinate vectors of the member spheres.  Each geometry fixes one target
Gram matrix; a row matrix W describes a valid mutually tangent configuration
exactly when W^T Q_n W equals that target, where Q_n is the Descartes form

    Q_n = I - (1/n) * ones * ones^T

on n+2 coordinates.  Everything here is generic over exact and float entries.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import linalg
from .scalars import DEFAULT_TOL, EXACT, FLOAT, coerce_row, is_exact, mode_of

EUCLIDEAN = "euclidean"
SPHERICAL = "spherical"
HYPERBOLIC = "hyperbolic"
GEOMETRIES = (EUCLIDEAN, SPHERICAL, HYPERBOLIC)


def bend_column(geometry):
    """Column index of the natural bend entry for the geometry.

    Euclidean rows are (inverted curvature, curvature, curvature*center),
    so the bend sits in column 1; spherical and hyperbolic rows lead with
    cot/coth of the radius.
    """
    if geometry == EUCLIDEAN:
        return 1
    if geometry in (SPHERICAL, HYPERBOLIC):
        return 0
    raise ValueError(f"unknown geometry {geometry!r}")


@dataclass(frozen=True)
class CoordRow:
    """One sphere's coordinate vector, tagged by geometry."""

    kind: str
    entries: tuple

    def __post_init__(self):
        if self.kind not in GEOMETRIES:
            raise ValueError(f"unknown row kind {self.kind!r}")
        if len(self.entries) < 3:
            raise ValueError("a coordinate row needs at least 3 entries")
        object.__setattr__(self, "entries", tuple(self.entries))

    @property
    def n(self):
        return len(self.entries) - 2

    @property
    def bend(self):
        return self.entries[bend_column(self.kind)]

    @property
    def mode(self):
        return mode_of(self.entries)


@dataclass(frozen=True)
class ConfigMatrix:
    """n+2 mutually tangent spheres as a stack of coordinate rows."""

    geometry: str
    rows: tuple

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if self.geometry not in GEOMETRIES:
            raise ValueError(f"unknown geometry {self.geometry!r}")
        if not rows:
            raise ValueError("empty configuration")
        width = len(rows[0].entries)
        if len(rows) != width:
            raise ValueError("configuration matrix must be square")
        for row in rows:
            if row.kind != self.geometry:
                raise ValueError("row kind does not match configuration geometry")
            if len(row.entries) != width:
                raise ValueError("ragged configuration rows")

    @property
    def n(self):
        return len(self.rows) - 2

    @property
    def mode(self):
        return EXACT if all(r.mode == EXACT for r in self.rows) else FLOAT

    @property
    def bends(self):
        return tuple(r.bend for r in self.rows)

    def matrix(self):
        return linalg.as_matrix([r.entries for r in self.rows], mode=self.mode)

    @classmethod
    def from_rows(cls, geometry, entry_rows, mode=None):
        if mode is None:
            mode = mode_of([x for row in entry_rows for x in row])
        rows = tuple(CoordRow(geometry, coerce_row(r, mode)) for r in entry_rows)
        return cls(geometry, rows)


@dataclass(frozen=True)
class QuadForm:
    """The Descartes form Q_n together with its dimension."""

    n: int
    matrix: np.ndarray


@dataclass(frozen=True)
class Residual:
    """Entrywise deviation of a Gram product from its target."""

    max_abs_entry_error: object
    entrywise: np.ndarray
    ok: bool


def _as_array(m):
    if isinstance(m, ConfigMatrix):
        return m.matrix()
    if isinstance(m, QuadForm):
        return m.matrix
    return np.asarray(m)


def descartes_form(n, mode=EXACT):
    """Q_n = I - (1/n) ones ones^T on n+2 coordinates."""
    if n < 1:
        raise ValueError("dimension must be positive")
    k = n + 2
    if mode == EXACT:
        c = Fraction(1, n)
        q = np.full((k, k), -c, dtype=object)
        for i in range(k):
            q[i, i] = 1 - c
    else:
        q = np.eye(k) - np.full((k, k), 1.0 / n)
    return QuadForm(n, q)


def descartes_form_inverse(n, mode=EXACT):
    """Q_n^{-1} = I - (1/2) ones ones^T, independent of n."""
    k = n + 2
    if mode == EXACT:
        half = Fraction(1, 2)
        q = np.full((k, k), -half, dtype=object)
        for i in range(k):
            q[i, i] = 1 - half
        return q
    return np.eye(k) - np.full((k, k), 0.5)


def lorentz_like_form(n, mode=EXACT):
    """diag(-1, 1, ..., 1) on n+2 coordinates."""
    j = linalg.identity(n + 2, mode == EXACT)
    j[0, 0] = -j[0, 0]
    return j


def _diag(values, mode):
    k = len(values)
    exact = mode == EXACT
    m = linalg.identity(k, exact)
    for i, v in enumerate(values):
        m[i, i] = Fraction(v) if exact else float(v)
    return m


def centers_gram_target(n, mode=EXACT):
    """Target for curvature-center matrices: diag(0, 2, ..., 2) on n+1."""
    return _diag([0] + [2] * n, mode)


def augmented_gram_target(n, mode=EXACT):
    """Target for Euclidean augmented matrices: antidiagonal -4 block, then 2I."""
    k = n + 2
    t = _diag([0] * 2 + [2] * n, mode)
    minus4 = Fraction(-4) if mode == EXACT else -4.0
    t[0, 1] = minus4
    t[1, 0] = minus4
    return t


def spherical_gram_target(n, mode=EXACT):
    return _diag([-2] + [2] * (n + 1), mode)


def hyperbolic_gram_target(n, mode=EXACT):
    return _diag([2, -2] + [2] * n, mode)


def target_for(geometry, n, mode=EXACT):
    if geometry == EUCLIDEAN:
        return augmented_gram_target(n, mode)
    if geometry == SPHERICAL:
        return spherical_gram_target(n, mode)
    if geometry == HYPERBOLIC:
        return hyperbolic_gram_target(n, mode)
    raise ValueError(f"unknown geometry {geometry!r}")


def pair_form(geometry, n, mode=EXACT):
    """Bilinear form evaluating to 1 on each row and -1 on tangent pairs."""
    exact = mode == EXACT
    if geometry == EUCLIDEAN:
        k = linalg.identity(n + 2, exact)
        zero = Fraction(0) if exact else 0.0
        half = Fraction(1, 2) if exact else 0.5
        k[0, 0] = zero
        k[1, 1] = zero
        k[0, 1] = -half
        k[1, 0] = -half
        return k
    if geometry == SPHERICAL:
        return lorentz_like_form(n, EXACT if exact else FLOAT)
    if geometry == HYPERBOLIC:
        j = linalg.identity(n + 2, exact)
        j[1, 1] = -j[1, 1]
        return j
    raise ValueError(f"unknown geometry {geometry!r}")


def pair_product(geometry, row_a, row_b):
    """Evaluate the geometry's tangency form on two entry tuples."""
    a = row_a.entries if isinstance(row_a, CoordRow) else tuple(row_a)
    b = row_b.entries if isinstance(row_b, CoordRow) else tuple(row_b)
    if len(a) != len(b):
        raise ValueError("row length mismatch")
    if geometry == EUCLIDEAN:
        half = Fraction(1, 2) if mode_of(a + b) == EXACT else 0.5
        tail = sum((x * y for x, y in zip(a[2:], b[2:])), start=a[0] * 0)
        return -half * (a[0] * b[1] + a[1] * b[0]) + tail
    if geometry == SPHERICAL:
        return -a[0] * b[0] + sum(x * y for x, y in zip(a[1:], b[1:]))
    if geometry == HYPERBOLIC:
        rest = sum(x * y for x, y in zip(a[2:], b[2:]))
        return a[0] * b[0] - a[1] * b[1] + rest
    raise ValueError(f"unknown geometry {geometry!r}")


def gram(w, q):
    """W^T Q W for a row matrix and a quadratic form."""
    wm = _as_array(w)
    return wm.T @ _as_array(q) @ wm


def check_identity(w, q, target, tol=DEFAULT_TOL):
    """Residual of W^T Q W against a target Gram matrix.

    Exact inputs are compared exactly and tol is ignored; float inputs pass
    when the largest entry deviation is within tol.
    """
    g = gram(w, q)
    diff = g - _as_array(target)
    err = linalg.max_abs(diff)
    exact = all(is_exact(x) for x in diff.flat)
    ok = err == 0 if exact else err <= tol
    return Residual(err, diff, bool(ok))


def inverse_conjugation_check(w, a, b, tol=DEFAULT_TOL):
    """Residual of W^T B^{-1} W - A^{-1}.

    Whenever W A W^T = B holds for square W, the transposed relation with the
    inverses holds as well; this check exercises that on concrete data.
    """
    wm = _as_array(w)
    am = _as_array(a)
    bm = _as_array(b)
    diff = wm.T @ linalg.mat_inv(bm) @ wm - linalg.mat_inv(am)
    err = linalg.max_abs(diff)
    exact = all(is_exact(x) for x in diff.flat)
    ok = err == 0 if exact else err <= tol
    return Residual(err, diff, bool(ok))
