"""Exact-arithmetic analysis of mixing for algebraic Z^2-actions.

Given a prime p and a Laurent polynomial f over F_p, the package
computes the convex-hull geometry of f, Newton polygons for the
non-Archimedean norms on the coefficient ring, norm extensions aligned
with the hull faces, bounds (and where possible the exact value) of the
order of mixing, and certificates or refutations of mixing for finite
shapes of lattice points.
"""

from .fieldpoly import FieldConfig, FpPoly, INFINITE, NEG_INF
from .geometry import Face, LatticePolygon, convex_hull, faces
from .laurent import LaurentPoly, PolyInU1, as_poly_in_u1, combination_solve, in_ideal
from .mixing import (
    IrreducibilityCertificate,
    MixingReport,
    ShapeVerdict,
    Witness,
    eisenstein_certify,
    order_bounds,
    sequence_diagnostics,
    shape_prefilter,
    shape_witness_search,
    three_shape_classify,
    voloch_identity_scan,
)
from .newton import ExtendedNorm, NewtonPolygon, Valuation, extended_norms, face_norm_for
from .parse import ParseError, parse_poly

__version__ = "0.1.0"

__all__ = [
    "FieldConfig",
    "FpPoly",
    "INFINITE",
    "NEG_INF",
    "Face",
    "LatticePolygon",
    "convex_hull",
    "faces",
    "LaurentPoly",
    "PolyInU1",
    "as_poly_in_u1",
    "combination_solve",
    "in_ideal",
    "IrreducibilityCertificate",
    "MixingReport",
    "ShapeVerdict",
    "Witness",
    "eisenstein_certify",
    "order_bounds",
    "sequence_diagnostics",
    "shape_prefilter",
    "shape_witness_search",
    "three_shape_classify",
    "voloch_identity_scan",
    "ExtendedNorm",
    "NewtonPolygon",
    "Valuation",
    "extended_norms",
    "face_norm_for",
    "ParseError",
    "parse_poly",
    "__version__",
]
