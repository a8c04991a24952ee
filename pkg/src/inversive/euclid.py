"""Oriented spheres and hyperplanes in Euclidean n-space.

A sphere with center x and oriented radius r = 1/b carries the augmented
coordinate row

    w(S) = (bbar, b, b*x_1, ..., b*x_n)

where bbar is the oriented curvature of the image of S under inversion in the
unit sphere.  A hyperplane {x : h.x = d} with unit normal h pointing into its
interior gets w(H) = (2d, 0, h).  In these coordinates inversion in the unit
sphere is simply the swap of the first two entries, and a family of n+2
mutually tangent spheres is characterized by the augmented Gram identity (see
forms.augmented_gram_target).
"""

from dataclasses import dataclass
from fractions import Fraction

from . import forms, linalg
from .scalars import (DEFAULT_TOL, EXACT, FLOAT, coerce_row, is_exact,
                      mode_of, near, sqrt_scalar)


@dataclass(frozen=True)
class OrientedSphere:
    """Sphere with nonzero oriented curvature; b > 0 means the interior is
    the bounded side."""

    curvature: object
    center: tuple

    def __post_init__(self):
        if self.curvature == 0:
            raise ValueError("curvature must be nonzero; use OrientedHyperplane")
        object.__setattr__(self, "center", tuple(self.center))

    @property
    def n(self):
        return len(self.center)

    @property
    def radius(self):
        if is_exact(self.curvature):
            return Fraction(1, 1) / self.curvature
        return 1.0 / self.curvature


@dataclass(frozen=True)
class OrientedHyperplane:
    """Hyperplane {x : normal.x = offset}; the unit normal points into the
    interior side."""

    normal: tuple
    offset: object

    def __post_init__(self):
        object.__setattr__(self, "normal", tuple(self.normal))
        norm2 = sum(h * h for h in self.normal)
        if not near(norm2, 1, 1e-9):
            raise ValueError("hyperplane normal must be a unit vector")

    @property
    def n(self):
        return len(self.normal)


def curvature_center(obj):
    """The curvature-center vector (b, b*x) of a sphere, or (0, h) of a
    hyperplane.  Hyperplane offsets are not recoverable from this vector;
    the augmented row keeps them."""
    if isinstance(obj, OrientedSphere):
        b = obj.curvature
        return (b,) + tuple(b * x for x in obj.center)
    return (0 * obj.offset,) + obj.normal


def augmented_coords(obj):
    """Augmented coordinate row of a sphere or hyperplane."""
    if isinstance(obj, OrientedSphere):
        b = obj.curvature
        norm2 = sum(x * x for x in obj.center)
        bbar = norm2 * b - 1 / (Fraction(b) if is_exact(b) else b)
        entries = (bbar, b) + tuple(b * x for x in obj.center)
    else:
        entries = (2 * obj.offset, 0 * obj.offset) + obj.normal
    mode = mode_of(entries)
    return forms.CoordRow(forms.EUCLIDEAN, coerce_row(entries, mode))


def pair_product(w1, w2):
    """Tangency form on two augmented rows: 1 on a row with itself, -1 for
    externally tangent pairs (disjoint interiors, one common point)."""
    return forms.pair_product(forms.EUCLIDEAN, w1, w2)


def object_from_augmented(row, tol=DEFAULT_TOL):
    """Rebuild the sphere or hyperplane encoded by an augmented row."""
    entries = row.entries if isinstance(row, forms.CoordRow) else tuple(row)
    self_product = forms.pair_product(forms.EUCLIDEAN, entries, entries)
    if not near(self_product, 1, tol):
        raise ValueError(f"not a valid augmented row, self product {self_product}")
    bbar, b = entries[0], entries[1]
    tail = entries[2:]
    exact = mode_of(entries) == EXACT
    if (b == 0) if exact else (abs(b) <= tol):
        if exact:
            d = Fraction(bbar, 2)
        else:
            d = bbar / 2.0
        return OrientedHyperplane(tail, d)
    return OrientedSphere(b, tuple(m / b for m in tail))


def invert_unit_sphere(obj):
    """Image of a sphere or hyperplane under inversion in the unit sphere.

    In augmented coordinates this is the swap of the first two entries.  The
    result may change species: spheres through the origin become hyperplanes
    and hyperplanes off the origin become spheres.  Points (curvature-free
    degenerate objects) are not representable and are rejected up front by
    the constructors.
    """
    w = augmented_coords(obj).entries
    swapped = (w[1], w[0]) + w[2:]
    return object_from_augmented(swapped)


def descartes_check(bends):
    """Value of the Descartes form on a bend vector; 0 for every family of
    n+2 mutually tangent spheres."""
    bends = tuple(bends)
    n = len(bends) - 2
    if n < 1:
        raise ValueError("need at least 3 bends")
    total = sum(bends)
    square_sum = sum(b * b for b in bends)
    if mode_of(bends) == EXACT:
        return square_sum - Fraction(1, n) * total * total
    return square_sum - (total * total) / n


def _as_complex_pair(z):
    if isinstance(z, complex):
        return (z.real, z.imag)
    x, y = z
    return (x, y)


def _cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def complex_descartes_check(bends, centers):
    """Residuals of the two planar center relations.

    For four mutually tangent circles with bends b and centers z (as complex
    numbers or (x, y) pairs):

        sum (b z)^2 = (1/2) (sum b z)^2
        sum b (b z) = (1/2) (sum b) (sum b z)

    Returns the two residuals as (re, im) pairs, exact when the input is.
    """
    bends = tuple(bends)
    if len(bends) != 4:
        raise ValueError("planar relation, need exactly 4 circles")
    zs = [_as_complex_pair(z) for z in centers]
    if len(zs) != 4:
        raise ValueError("need exactly 4 centers")
    bz = [(b * z[0], b * z[1]) for b, z in zip(bends, zs)]
    sum_b = sum(bends)
    sum_bz = (sum(v[0] for v in bz), sum(v[1] for v in bz))
    half = Fraction(1, 2) if mode_of(bends + sum(zs, ())) == EXACT else 0.5
    sq = [_cmul(v, v) for v in bz]
    lhs1 = (sum(v[0] for v in sq), sum(v[1] for v in sq))
    rhs1 = _cmul(sum_bz, sum_bz)
    res1 = (lhs1[0] - half * rhs1[0], lhs1[1] - half * rhs1[1])
    lhs2 = (sum(b * v[0] for b, v in zip(bends, bz)),
            sum(b * v[1] for b, v in zip(bends, bz)))
    res2 = (lhs2[0] - half * sum_b * sum_bz[0],
            lhs2[1] - half * sum_b * sum_bz[1])
    return res1, res2


def config_from_objects(objs):
    """Stack augmented rows of n+2 objects into a configuration matrix."""
    rows = tuple(augmented_coords(o) for o in objs)
    return forms.ConfigMatrix(forms.EUCLIDEAN, rows)


def objects_from_config(config, tol=DEFAULT_TOL):
    return tuple(object_from_augmented(r, tol) for r in config.rows)


def translate(obj, v):
    """Translate a sphere or hyperplane by the vector v."""
    if isinstance(obj, OrientedSphere):
        return OrientedSphere(obj.curvature,
                              tuple(x + d for x, d in zip(obj.center, v)))
    shift = sum(h * d for h, d in zip(obj.normal, v))
    return OrientedHyperplane(obj.normal, obj.offset + shift)


def scale(obj, s):
    """Scale a sphere or hyperplane about the origin by s > 0."""
    if s <= 0:
        raise ValueError("scale factor must be positive")
    if isinstance(obj, OrientedSphere):
        b = obj.curvature / s if not is_exact(obj.curvature) else Fraction(obj.curvature, 1) / s
        return OrientedSphere(b, tuple(x * s for x in obj.center))
    return OrientedHyperplane(obj.normal, obj.offset * s)


def _complete_rows(w1, w2, w3, mode):
    """Both augmented rows tangent to three mutually tangent rows."""
    exact = mode == EXACT
    k = forms.pair_form(forms.EUCLIDEAN, 2, EXACT if exact else FLOAT)
    rows = linalg.as_matrix([w1, w2, w3], mode=mode)
    system = rows @ k
    minus_one = [-1, -1, -1]
    particular, kernel = linalg.solve_affine(system, minus_one)
    if len(kernel) != 1:
        raise ValueError("degenerate input rows")
    kv = kernel[0]
    a = kv @ k @ kv
    b = 2 * (particular @ k @ kv)
    c = particular @ k @ particular - 1
    if a == 0:
        raise ValueError("degenerate tangency arrangement")
    disc = b * b - 4 * a * c
    if not exact and disc < 0:
        raise ValueError("no real completion; tangency points may coincide")
    root = sqrt_scalar(disc)
    if root == 0:
        raise ValueError("completions coincide; tangency points are not distinct")
    u1 = (-b + root) / (2 * a)
    u2 = (-b - root) / (2 * a)
    sol1 = tuple(particular + u1 * kv)
    sol2 = tuple(particular + u2 * kv)
    return sol1, sol2


def complete_to_descartes(s1, s2, s3, tol=DEFAULT_TOL):
    """The two ways to extend three mutually tangent circles to four.

    Input objects must be pairwise externally tangent with distinct tangency
    points.  Returns two planar configurations sharing the first three rows,
    ordered by the completed row.
    """
    objs = (s1, s2, s3)
    ws = [augmented_coords(o) for o in objs]
    if any(len(w.entries) != 4 for w in ws):
        raise ValueError("completion is implemented for circles in the plane")
    for i in range(3):
        for j in range(i + 1, 3):
            p = pair_product(ws[i], ws[j])
            if not near(p, -1, tol):
                raise ValueError(
                    f"objects {i} and {j} are not externally tangent "
                    f"(pair product {p})")
    mode = mode_of([x for w in ws for x in w.entries])
    sol1, sol2 = _complete_rows(ws[0].entries, ws[1].entries, ws[2].entries, mode)
    first, second = sorted([sol1, sol2])
    def build(w4):
        rows = tuple(ws) + (forms.CoordRow(forms.EUCLIDEAN, coerce_row(w4, mode)),)
        return forms.ConfigMatrix(forms.EUCLIDEAN, rows)
    return build(first), build(second)


def _realize_strip(bends, mode):
    """Two parallel lines and two equal circles, matching bend positions."""
    zero_pos = [i for i, b in enumerate(bends) if b == 0]
    circle_pos = [i for i, b in enumerate(bends) if b != 0]
    s = bends[circle_pos[0]]
    r = (Fraction(1, 1) if mode == EXACT else 1.0) / s
    one = Fraction(1) if mode == EXACT else 1.0
    objs = [None] * 4
    objs[zero_pos[0]] = OrientedHyperplane((0 * one, -one), 0 * one)
    objs[zero_pos[1]] = OrientedHyperplane((0 * one, one), 2 * r)
    objs[circle_pos[0]] = OrientedSphere(s, (0 * one, r))
    objs[circle_pos[1]] = OrientedSphere(s, (2 * r, r))
    return config_from_objects(objs)


def realize_curvature_vector(bends, tol=DEFAULT_TOL):
    """Construct one planar configuration with the prescribed bend vector.

    The bends must satisfy the Descartes relation.  Placement is canonical:
    the two largest bends become circles tangent at the origin with centers
    on the x axis, the third circle sits in the upper half plane, and the
    remaining row is the matching completion.  A vector with two zero bends
    yields the two-line strip arrangement instead.  Vectors whose majority
    orientation is outward are realized by reversing all orientations of the
    mirror input.
    """
    bends = tuple(bends)
    if len(bends) != 4:
        raise ValueError("realization is implemented for the plane (4 bends)")
    mode = mode_of(bends)
    if mode == EXACT:
        bends = tuple(Fraction(b) for b in bends)
    residual = descartes_check(bends)
    if not near(residual, 0, tol):
        raise ValueError(f"bends violate the Descartes relation by {residual}")
    if all(b == 0 for b in bends):
        raise ValueError("the zero vector is not a bend vector")
    positives = sum(1 for b in bends if b > 0)
    if positives < 2:
        flipped = realize_curvature_vector(tuple(-b for b in bends), tol)
        rows = tuple(
            forms.CoordRow(forms.EUCLIDEAN, tuple(-x for x in r.entries))
            for r in flipped.rows)
        return forms.ConfigMatrix(forms.EUCLIDEAN, rows)
    zeros = sum(1 for b in bends if b == 0)
    if zeros == 2:
        return _realize_strip(bends, mode)
    order = sorted(range(4), key=lambda i: (-bends[i], i))
    ba, bb, bc, bd = (bends[i] for i in order)
    one = Fraction(1) if mode == EXACT else 1.0
    ra, rb, rc = one / ba, one / bb, one / bc
    ax, bx = ra, -rb
    cx = rc * (rb - ra) / (ra + rb)
    cy = 2 * sqrt_scalar((ra + rb + rc) * ra * rb * rc) / (ra + rb)
    circle_a = OrientedSphere(ba, (ax, 0 * one))
    circle_b = OrientedSphere(bb, (bx, 0 * one))
    circle_c = OrientedSphere(bc, (cx, cy))
    rows3 = [augmented_coords(o).entries for o in (circle_a, circle_b, circle_c)]
    sol1, sol2 = _complete_rows(rows3[0], rows3[1], rows3[2], mode)
    if near(sol1[1], bd, tol):
        w4 = sol1
    elif near(sol2[1], bd, tol):
        w4 = sol2
    else:
        raise ValueError("no completion matches the fourth bend")
    placed = rows3 + [w4]
    ordered = [None] * 4
    for slot, original_index in enumerate(order):
        ordered[original_index] = placed[slot]
    return forms.ConfigMatrix.from_rows(forms.EUCLIDEAN, ordered, mode=mode)
