"""Combinatorial maps, surface words and map geometries."""

from ._kernels import BACKEND
from .combinatorial_map import (
    CombinatorialMap,
    MapCensus,
    are_isomorphic,
    automorphism_count,
    census,
    dual,
    faces,
    isomorphisms,
    parse_map,
    validate,
    vertices,
)
from .embedding import (
    GenusPolynomial,
    count_nonisomorphic_maps,
    enumerate_locally_orientable,
    enumerate_orientable,
    genus_polynomial,
)
from .errors import (
    GeometryError,
    GraphError,
    GroundSetMismatch,
    MapGeomError,
    NotSManifoldError,
    ParseError,
    ScaleBoundError,
    StructuralError,
    WordError,
)
from .geometry import MapGeometry, PointClass, classify_vertex, make_assignment, polygon_angle_sum
from .graph import Graph, betti, graph_automorphisms
from .permutation import GroundSet, Permutation
from .smanifold import SManifoldClass, classify as classify_smanifold
from .surface_word import StandardSurface, SurfaceWord, canonical_form

__version__ = "0.1.0"
