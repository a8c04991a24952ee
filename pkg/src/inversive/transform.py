"""Conversions between the three geometries.

Stereographic projection from the unit sphere to the equatorial hyperplane
(and the analogous hyperboloid correspondence) act on coordinate rows as
right multiplication by fixed integer or half-integer matrices:

    w  = w+ G        with G = [[1, 1, 0], [-1, 1, 0], [0, 0, I]]
    w- = w+ P        with P the swap of the first two columns

so converting whole configurations is exact.  The scalar shadow of G is the
bend triple: a Euclidean row with entries (bbar, b, ...) corresponds to caps
and hyperbolic spheres with

    cot alpha = (b + bbar)/2,    coth s = (b - bbar)/2

whence cot alpha + coth s = b for every circle of corresponding packings.

cap_to_plane and plane_to_cap are deliberately not written as G products;
they apply the projection formulas directly so the matrix route can be
tested against an independently computed answer.
"""

import math
from fractions import Fraction

from . import euclid, forms, linalg, spherical
from .scalars import DEFAULT_TOL, EXACT, coerce_row, mode_of, near

_ORDER = (forms.EUCLIDEAN, forms.SPHERICAL, forms.HYPERBOLIC)


def _block(first_two_rows, n, mode):
    exact = mode == EXACT
    m = linalg.identity(n + 2, exact)
    one = Fraction(1) if exact else 1.0
    for i, row in enumerate(first_two_rows):
        m[i, 0] = row[0] * one
        m[i, 1] = row[1] * one
    return m


def conversion_matrix(src, dst, n, mode=EXACT):
    """Right-multiplication matrix sending src-kind rows to dst-kind rows."""
    for tag in (src, dst):
        if tag not in _ORDER:
            raise ValueError(f"unknown geometry {tag!r}")
    exact = mode == EXACT
    half = Fraction(1, 2) if exact else 0.5
    if src == dst:
        return linalg.identity(n + 2, exact)
    if (src, dst) == (forms.SPHERICAL, forms.EUCLIDEAN):
        return _block([(1, 1), (-1, 1)], n, mode)
    if (src, dst) == (forms.EUCLIDEAN, forms.SPHERICAL):
        return _block([(half, -half), (half, half)], n, mode)
    if (src, dst) == (forms.SPHERICAL, forms.HYPERBOLIC) or \
       (src, dst) == (forms.HYPERBOLIC, forms.SPHERICAL):
        return _block([(0, 1), (1, 0)], n, mode)
    if (src, dst) == (forms.HYPERBOLIC, forms.EUCLIDEAN):
        return _block([(-1, 1), (1, 1)], n, mode)
    if (src, dst) == (forms.EUCLIDEAN, forms.HYPERBOLIC):
        return _block([(-half, half), (half, half)], n, mode)
    raise ValueError(f"no conversion from {src} to {dst}")


def convert_matrix(w, to, tol=DEFAULT_TOL):
    """Convert a configuration to another geometry's coordinates.

    The input must satisfy its own Gram identity; the output satisfies the
    target's.  Conversion back is the inverse matrix, so round trips are
    exact in rational mode.
    """
    if not isinstance(w, forms.ConfigMatrix):
        raise TypeError("convert_matrix expects a ConfigMatrix")
    n = w.n
    mode = w.mode
    q = forms.descartes_form(n, mode)
    res = forms.check_identity(w, q, forms.target_for(w.geometry, n, mode), tol)
    if not res.ok:
        raise ValueError(
            f"input violates the {w.geometry} identity "
            f"(max residual {res.max_abs_entry_error})")
    m = conversion_matrix(w.geometry, to, n, mode)
    converted = w.matrix() @ m
    return forms.ConfigMatrix.from_rows(to, [tuple(r) for r in converted],
                                        mode=mode)


def bend_triple(b, bbar):
    """(cot alpha, coth s) of the cap and hyperbolic sphere matching a
    Euclidean row with bend b and inverted bend bbar; their sum is b."""
    half = Fraction(1, 2) if mode_of((b, bbar)) == EXACT else 0.5
    return (half * (b + bbar), half * (b - bbar))


def cap_to_plane(cap, tol=DEFAULT_TOL):
    """Stereographic image of a cap: a sphere, or a hyperplane when the
    cap's boundary passes through the projection pole.

    With cap center p and angular radius alpha, the image sphere has center
    x_j = p_j/(p_0 + cos alpha) and oriented radius sin alpha/(p_0 + cos
    alpha); when p_0 + cos alpha = 0 the image is the hyperplane with unit
    normal p_j/sin alpha at offset cot alpha.  Row-backed caps divide row
    entries instead, which keeps rational rows rational.
    """
    if cap.row is not None:
        c = cap.row[0]
        q0 = cap.row[1]
        q = cap.row[2:]
        b = q0 + c
        exact = mode_of(cap.row) == EXACT
        if (b == 0) if exact else near(b, 0, tol):
            return euclid.OrientedHyperplane(q, c)
        return euclid.OrientedSphere(b, tuple(
            (Fraction(x) if exact else x) / b for x in q))
    ca = math.cos(cap.angular_radius)
    sa = math.sin(cap.angular_radius)
    denom = float(cap.center[0]) + ca
    if near(denom, 0, tol):
        return euclid.OrientedHyperplane(
            tuple(float(p) / sa for p in cap.center[1:]), ca / sa)
    return euclid.OrientedSphere(denom / sa,
                                 tuple(float(p) / denom for p in cap.center[1:]))


def plane_to_cap(obj):
    """Cap whose stereographic image is the given sphere or hyperplane.

    Builds the cap row directly: a sphere with curvature b and center x
    lifts to (cot alpha, q_0, b x) with cot alpha = (b (1 + |x|^2) - 1/b)/2
    and q_0 = (b (1 - |x|^2) + 1/b)/2; a hyperplane at offset d with unit
    normal h lifts to (d, -d, h).
    """
    if isinstance(obj, euclid.OrientedHyperplane):
        d = obj.offset
        entries = (d, -d) + obj.normal
    else:
        b = obj.curvature
        inv = (Fraction(1) if mode_of((b,)) == EXACT else 1.0) / b
        norm2 = sum(x * x for x in obj.center)
        half = Fraction(1, 2) if mode_of((b,) + obj.center) == EXACT else 0.5
        entries = (half * (b * (1 + norm2) - inv),
                   half * (b * (1 - norm2) + inv)) + \
            tuple(b * x for x in obj.center)
    entries = coerce_row(entries, mode_of(entries))
    return spherical.cap_from_coords(entries)
