"""Integer convex-hull geometry for exponent vectors in Z^2.

Everything is exact: orientation predicates are integer cross products
(Python integers never overflow) and ratios are `fractions.Fraction`.
Hulls are stored counter-clockwise starting at the lexicographically
smallest vertex so that face numbering is reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

POINT = "point"
SEGMENT = "segment"
POLYGON = "polygon"

COORD_LIMIT = 1 << 20


def cross(o, a, b):
    """Twice the signed area of triangle (o, a, b); > 0 means left turn."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (b[0] - o[0]) * (a[1] - o[1])


def _check_coord(pt):
    if abs(pt[0]) > COORD_LIMIT or abs(pt[1]) > COORD_LIMIT:
        raise ValueError(f"coordinate out of range (|e| <= 2^20): {pt}")


def primitive(v):
    """v divided by gcd of its components; (0, 0) is rejected."""
    g = math.gcd(v[0], v[1])
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return (v[0] // g, v[1] // g)


def canonical_direction(v):
    """Primitive form of v with the first nonzero coordinate positive."""
    d = primitive(v)
    if d[0] < 0 or (d[0] == 0 and d[1] < 0):
        d = (-d[0], -d[1])
    return d


@dataclass(frozen=True)
class LatticePolygon:
    """Convex hull of a finite point set: extreme points only, CCW."""

    vertices: tuple
    degeneracy: str

    def __iter__(self):
        return iter(self.vertices)


@dataclass(frozen=True)
class Face:
    """One edge of a hull, with primitive direction and outward normal."""

    start: tuple
    end: tuple
    direction: tuple
    normal: tuple
    lattice_length: int


def convex_hull(points) -> LatticePolygon:
    """Monotone-chain hull; vertices are exactly the extreme points, CCW.

    Collinear points interior to an edge are dropped.  Degenerate inputs
    classify as POINT or SEGMENT (with the two extreme endpoints kept).
    """
    pts = sorted(set(tuple(p) for p in points))
    if not pts:
        raise ValueError("convex hull of an empty set")
    for pt in pts:
        _check_coord(pt)
    if len(pts) == 1:
        return LatticePolygon((pts[0],), POINT)

    def chain(seq):
        out = []
        for pt in seq:
            while len(out) > 1 and cross(out[-2], out[-1], pt) <= 0:
                out.pop()
            out.append(pt)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    verts = lower[:-1] + upper[:-1]
    if len(verts) == 2:
        return LatticePolygon(tuple(sorted(verts)), SEGMENT)
    start = verts.index(min(verts))
    verts = verts[start:] + verts[:start]
    return LatticePolygon(tuple(verts), POLYGON)


def contains(poly: LatticePolygon, pt) -> bool:
    """True when pt lies inside or on the boundary of the hull."""
    vs = poly.vertices
    if poly.degeneracy == POINT:
        return tuple(pt) == vs[0]
    if poly.degeneracy == SEGMENT:
        a, b = vs
        if cross(a, b, pt) != 0:
            return False
        return min(a[0], b[0]) <= pt[0] <= max(a[0], b[0]) and min(
            a[1], b[1]
        ) <= pt[1] <= max(a[1], b[1])
    n = len(vs)
    return all(cross(vs[i], vs[(i + 1) % n], pt) >= 0 for i in range(n))


def _make_face(a, b):
    d = primitive((b[0] - a[0], b[1] - a[1]))
    # interior of a CCW polygon lies left of each edge, so outward is right
    normal = (d[1], -d[0])
    length = math.gcd(b[0] - a[0], b[1] - a[1])
    return Face(a, b, d, normal, length)


def faces(poly: LatticePolygon):
    """Faces in CCW order from the lexicographically smallest vertex.

    A SEGMENT hull yields exactly one face whose normal is only canonical
    (there is no interior to point away from); POINT hulls are an error.
    """
    if poly.degeneracy == POINT:
        raise ValueError("a single point has no faces")
    if poly.degeneracy == SEGMENT:
        a, b = poly.vertices
        d = canonical_direction((b[0] - a[0], b[1] - a[1]))
        normal = canonical_direction((d[1], -d[0]))
        return [Face(a, b, d, normal, math.gcd(b[0] - a[0], b[1] - a[1]))]
    vs = poly.vertices
    n = len(vs)
    return [_make_face(vs[i], vs[(i + 1) % n]) for i in range(n)]


def slope_set(face_list):
    """Face directions deduplicated up to sign (canonical primitive form)."""
    return {canonical_direction(f.direction) for f in face_list}


def _ccw_arrangement(points):
    # distinct triple -> CCW-ordered tuple, or None when collinear
    a, b, c = points
    s = cross(a, b, c)
    if s == 0:
        return None
    return (a, b, c) if s > 0 else (a, c, b)


def _ratio_of(u, v):
    # u = q * v for a single rational q, else None
    if v == (0, 0):
        return None
    q = Fraction(u[1], v[1]) if v[0] == 0 else Fraction(u[0], v[0])
    if (q * v[0], q * v[1]) != (u[0], u[1]):
        return None
    return q


def triangle_homothety(shape, poly: LatticePolygon):
    """Cyclic assignment of a 3-point shape onto a triangle's vertices with
    all corresponding vertex differences equal to a single rational multiple.

    Returns (assignment, ratio) where assignment[i] maps onto vertex i and
    ratio may be negative (a point-reflected copy); None when no single
    ratio works or the shape is collinear.
    """
    if poly.degeneracy != POLYGON or len(poly.vertices) != 3:
        raise ValueError("expected a non-degenerate triangle hull")
    pts = [tuple(p) for p in shape]
    if len(set(pts)) != 3:
        return None
    arranged = _ccw_arrangement(pts)
    if arranged is None:
        return None
    d = poly.vertices
    tdiff = [
        (d[(i + 1) % 3][0] - d[i][0], d[(i + 1) % 3][1] - d[i][1]) for i in range(3)
    ]
    for r in range(3):
        rot = arranged[r:] + arranged[:r]
        sdiff = [
            (rot[(i + 1) % 3][0] - rot[i][0], rot[(i + 1) % 3][1] - rot[i][1])
            for i in range(3)
        ]
        q = _ratio_of(sdiff[0], tdiff[0])
        if q is None or q == 0:
            continue
        if all(_ratio_of(sdiff[i], tdiff[i]) == q for i in (1, 2)):
            return rot, q
    return None


def proportional_triangle_match(shape, poly: LatticePolygon):
    """Orientation-preserving positive-homothety match of a 3-point shape
    against a triangle hull: shape[i+1] - shape[i] = q * (d[i+1] - d[i])
    for one positive rational q.  Reflected or point-reflected copies are
    not accepted.  Returns (assignment, q) or None.
    """
    got = triangle_homothety(shape, poly)
    if got is None:
        return None
    rot, q = got
    if q <= 0:
        return None
    return rot, q


def centroid(poly: LatticePolygon):
    """Vertex centroid with exact rational coordinates."""
    vs = poly.vertices
    n = len(vs)
    return (
        Fraction(sum(v[0] for v in vs), n),
        Fraction(sum(v[1] for v in vs), n),
    )


def minkowski_sum_points(a_points, b_points):
    """All pairwise sums; the hull of the result is the Minkowski sum hull."""
    return {(pa[0] + pb[0], pa[1] + pb[1]) for pa in a_points for pb in b_points}


def lattice_points_of_difference(outer: LatticePolygon, inner: LatticePolygon):
    """Integer vectors v with v + inner contained in outer, in lex order.

    This is the lattice part of the Minkowski difference outer - inner,
    computed by scanning the coordinate bounding box with exact
    containment tests against every vertex of inner.
    """
    ivs = inner.vertices
    xs = [v[0] for v in outer.vertices]
    ys = [v[1] for v in outer.vertices]
    ixs = [v[0] for v in ivs]
    iys = [v[1] for v in ivs]
    out = []
    for vx in range(min(xs) - max(ixs), max(xs) - min(ixs) + 1):
        for vy in range(min(ys) - max(iys), max(ys) - min(iys) + 1):
            if all(contains(outer, (vx + w[0], vy + w[1])) for w in ivs):
                out.append((vx, vy))
    return out
