"""Newton polygons of bivariate Laurent polynomials with respect to
non-Archimedean norms on the coefficient ring, and the norm extensions
they induce.

The base norms on F_p[u2] are |a|_g = p^(-ord_g a) for an irreducible g
and the degree norm |a| = p^(deg a).  Writing f as sum q_i(u2) u1^i, the
Newton polygon is the lower convex hull of the points (i, -log_p|q_i|),
ordinates taken as exact rationals with +infinity for q_i = 0.  Each
segment of slope s yields an extension norm with log_p|u1| = s.

`face_norm_for` runs the reduction that turns a hull face into such a
norm: swap the variables when the face is vertical, replace u2 by its
inverse when the face points upward, read the slope off the Newton
polygon, and map the resulting log-vector back through the recorded
coordinate changes.  The outcome is always a positive multiple of the
face's primitive outward normal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import geometry
from .fieldpoly import FpPoly, INFINITE, is_irreducible, neg_log_infinity_norm, ord_at
from .laurent import LaurentPoly, PolyInU1, as_poly_in_u1

FINITE = "finite"
INFINITY_DEG = "infinity"


@dataclass(frozen=True)
class Valuation:
    """A base norm on the coefficient ring, plus coordinate bookkeeping.

    kind is FINITE (p^-ord_g) or INFINITY_DEG (p^deg).  coeff_axis names
    the original variable (1 or 2) that carries the coefficient ring;
    inverted records whether that variable was replaced by its inverse
    before the polynomial was rewritten.
    """

    kind: str
    g: FpPoly | None = None
    coeff_axis: int = 2
    inverted: bool = False

    def __post_init__(self):
        if self.kind not in (FINITE, INFINITY_DEG):
            raise ValueError(f"unknown valuation kind {self.kind!r}")
        if self.coeff_axis not in (1, 2):
            raise ValueError("coeff_axis must be 1 or 2")
        if self.kind == FINITE:
            if self.g is None or self.g.degree < 1:
                raise ValueError("finite valuation needs a non-constant g")
            if not is_irreducible(self.g):
                raise ValueError("finite valuation needs an irreducible g")
        elif self.g is not None:
            raise ValueError("degree valuation takes no polynomial")

    @classmethod
    def finite_at(cls, g, coeff_axis=2, inverted=False):
        return cls(FINITE, g, coeff_axis, inverted)

    @classmethod
    def infinity_deg(cls, coeff_axis=2, inverted=False):
        return cls(INFINITY_DEG, None, coeff_axis, inverted)

    def ordinate(self, q: FpPoly):
        """-log_p of the base norm of q (INFINITE for q = 0)."""
        if self.kind == FINITE:
            v = ord_at(q, self.g) if not q.is_zero() else INFINITE
        else:
            v = neg_log_infinity_norm(q)
        return v if v == INFINITE else Fraction(v)

    def coeff_log(self):
        """log_p of the base norm of the coefficient variable itself."""
        if self.kind == INFINITY_DEG:
            return Fraction(1)
        return Fraction(-ord_at(FpPoly.x(self.g.p), self.g))

    def describe(self):
        base = (
            f"ord({self.g.to_string('u2')})" if self.kind == FINITE else "deg"
        )
        coeff = f"u{self.coeff_axis}"
        inv = ", inverted" if self.inverted else ""
        return f"{base} on F_p[{coeff}]{inv}"


class NewtonPoint(NamedTuple):
    index: int
    ordinate: object  # Fraction or INFINITE


class Segment(NamedTuple):
    slope: Fraction
    start: int
    end: int


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower convex hull of Newton points: vertices where the slope
    changes, and the segments between them with strictly increasing
    slopes."""

    vertices: tuple
    segments: tuple


@dataclass(frozen=True)
class ExtendedNorm:
    """Logs (base p) of |u1| and |u2| under one extension norm."""

    log_u1: Fraction
    log_u2: Fraction
    source: tuple

    def __post_init__(self):
        if self.log_u1 == 0 and self.log_u2 == 0:
            raise ValueError("trivial norm vector (0, 0)")

    def vector(self):
        return (self.log_u1, self.log_u2)


def newton_points(f: PolyInU1, val: Valuation):
    """One point (i, -log_p|q_i|) per coefficient of f."""
    return [NewtonPoint(i, val.ordinate(q)) for i, q in enumerate(f.coeffs)]


def lower_hull(points) -> NewtonPolygon:
    """Highest convex polygonal line lying on or below all finite points.

    Points with INFINITE ordinate sit above every line and are ignored.
    With fewer than two finite points the polygon degenerates to a single
    vertex and has no segments.
    """
    finite = [pt for pt in points if pt.ordinate != INFINITE]
    if not finite:
        raise ValueError("no finite Newton points")
    hull = []
    for pt in finite:
        while len(hull) > 1:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # pop unless the chain turns strictly left at hull[-1]
            if (x2 - x1) * (pt.ordinate - y1) - (pt.index - x1) * (y2 - y1) > 0:
                break
            hull.pop()
        hull.append(pt)
    segments = tuple(
        Segment(Fraction(b.ordinate - a.ordinate, b.index - a.index), a.index, b.index)
        for a, b in zip(hull, hull[1:])
    )
    return NewtonPolygon(tuple(hull), segments)


def _transform_matrix(val: Valuation):
    # exponent map applied to f before rewriting: swap first, then invert
    swap = val.coeff_axis == 1
    m = ((0, 1), (1, 0)) if swap else ((1, 0), (0, 1))
    if val.inverted:
        m = (m[0], (-m[1][0], -m[1][1]))
    return m


def _map_back(w, val: Valuation):
    # log-vectors pull back through the transpose of the exponent map
    lam, c = w
    if val.inverted:
        c = -c
    if val.coeff_axis == 1:
        return (c, lam)
    return (lam, c)


def _transformed(f: LaurentPoly, val: Valuation) -> PolyInU1:
    return as_poly_in_u1(f.map_exponents(_transform_matrix(val)))


def extended_norms(f: LaurentPoly, val: Valuation):
    """All extensions of the base norm to the quotient by f, one per
    Newton-polygon segment, expressed in the original coordinates."""
    if f.is_zero() or f.is_monomial():
        raise ValueError("norm extensions need a non-monomial, nonzero f")
    poly = _transformed(f, val)
    np = lower_hull(newton_points(poly, val))
    coeff_log = val.coeff_log()
    out = []
    for seg in np.segments:
        vec = _map_back((seg.slope, coeff_log), val)
        out.append(ExtendedNorm(vec[0], vec[1], (seg.slope, val)))
    return out


@dataclass(frozen=True)
class FaceNewtonData:
    """Everything the face-to-norm reduction produced for one face."""

    face: geometry.Face
    valuation: Valuation
    points: tuple
    polygon: NewtonPolygon
    segment: Segment
    norm: ExtendedNorm


def face_newton_data(f: LaurentPoly, face: geometry.Face) -> FaceNewtonData:
    """Run the face-to-norm reduction and keep the intermediate data.

    The face must belong to the hull of the support of f.  Vertical faces
    are handled by exchanging u1 and u2; upward faces by replacing u2
    with its inverse; afterwards the face is a lower face and its slope
    appears among the Newton-polygon slopes for ord_{u2}.
    """
    hull = geometry.convex_hull(f.support())
    if face not in geometry.faces(hull):
        raise ValueError("face does not belong to the hull of f")
    swap = face.direction[0] == 0
    n1 = (face.normal[1], face.normal[0]) if swap else face.normal
    inverted = n1[1] > 0
    val = Valuation.finite_at(
        FpPoly.x(f.p), coeff_axis=1 if swap else 2, inverted=inverted
    )
    (a, b), (c, d) = _transform_matrix(val)
    dvec = (
        a * face.direction[0] + b * face.direction[1],
        c * face.direction[0] + d * face.direction[1],
    )
    target = Fraction(dvec[1], dvec[0])
    poly = _transformed(f, val)
    points = tuple(newton_points(poly, val))
    np = lower_hull(points)
    for seg in np.segments:
        if seg.slope == target:
            vec = _map_back((seg.slope, val.coeff_log()), val)
            norm = ExtendedNorm(vec[0], vec[1], (face, val))
            _assert_outward(norm, face)
            return FaceNewtonData(face, val, points, np, seg, norm)
    raise AssertionError(
        f"no Newton segment with slope {target} for face {face.start}->{face.end}"
    )


def face_norm_for(f: LaurentPoly, face: geometry.Face) -> ExtendedNorm:
    """The norm whose log-vector is an outward normal to the given face."""
    return face_newton_data(f, face).norm


def _assert_outward(norm: ExtendedNorm, face: geometry.Face):
    v = norm.vector()
    n = face.normal
    if v[0] * n[1] != v[1] * n[0] or v[0] * n[0] + v[1] * n[1] <= 0:
        raise AssertionError(
            f"norm vector {v} is not a positive multiple of face normal {n}"
        )
