"""orbitile: kaleidoscopic orbifolds, universal covers, and tiling renders.

Everything lives in a planar model of its geometry: the stereographic plane
for spherical orbifolds, the plain complex plane for Euclidean ones, and the
Poincare disk for hyperbolic ones.  Rigid motions are Moebius matrices with
an optional conjugation; polygons are built from corner orders alone.

The usual flow is parse -> classify -> build -> generate_cover ->
export_tiling / render_cover; the cli and service modules wrap the same
request core for the command line and HTTP.
"""

__version__ = "0.1.0"

from .construct import (
    FundamentalPolygon,
    build,
    polygon_area,
    required_free_vars,
    right_pentagon_sides,
    right_quad_sides,
    validate_closure,
)
from .cover import Cover, CoverOptions, RoomCopy, emphasis_weights, generate_cover
from .errors import (
    ConstructionError,
    CoverTooLargeError,
    InfeasibleFreeVariableError,
    NotRealizableError,
    NumericDomainError,
    OrbitileError,
    ParseError,
    RequestValidationError,
    WrongGeometryError,
)
from .geometry import distance, geodesic_through, reflect_across, translation_taking
from .moebius import INFINITY, IsometryTransform, MoebiusMatrix
from .notation import (
    Classification,
    OrbifoldNotation,
    classify,
    enumerate_orbifolds,
    euler_characteristic,
    format_notation,
    normalize,
    parse,
)
from .render import RenderStyle, export_tiling, render_cover, tiling_json
from .scene import SpiralRay, spiral_point, spiral_triangle_intersect

__all__ = [
    "Classification",
    "ConstructionError",
    "Cover",
    "CoverOptions",
    "CoverTooLargeError",
    "FundamentalPolygon",
    "INFINITY",
    "InfeasibleFreeVariableError",
    "IsometryTransform",
    "MoebiusMatrix",
    "NotRealizableError",
    "NumericDomainError",
    "OrbifoldNotation",
    "OrbitileError",
    "ParseError",
    "RenderStyle",
    "RequestValidationError",
    "RoomCopy",
    "SpiralRay",
    "WrongGeometryError",
    "build",
    "classify",
    "distance",
    "emphasis_weights",
    "enumerate_orbifolds",
    "euler_characteristic",
    "export_tiling",
    "format_notation",
    "generate_cover",
    "geodesic_through",
    "normalize",
    "parse",
    "polygon_area",
    "reflect_across",
    "render_cover",
    "required_free_vars",
    "right_pentagon_sides",
    "right_quad_sides",
    "spiral_point",
    "spiral_triangle_intersect",
    "tiling_json",
    "translation_taking",
    "validate_closure",
]
