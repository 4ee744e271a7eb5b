"""matroidkit: matroid construction, queries, minors, Tutte polynomials,
greedy optimization, basis polytopes, and graded flat algebras."""

from .algebra import (
    ChowPresentation,
    PolytopeVertices,
    chow_hilbert,
    chow_presentation,
    polytope_vertices,
)
from .construct import (
    components,
    direct_sum,
    graphic_matroid,
    linear_matroid,
    matroid_from_circuits,
    matroid_from_nonbases,
    specific_matroid,
    uniform_matroid,
)
from .core import Matroid
from .graphs import (
    Cycle,
    Graph,
    closed_walks,
    complete_graph,
    component_count,
    generalized_petersen,
    get_cycles,
    graph_from_edges,
)
from .linalg import ExactMatrix
from .optimize import greedy
from .search import IsoWitness, MinorWitness, has_minor, isomorphism
from .subsets import GroundSubset
from .transform import contraction, deletion, dual, minor, restriction
from .tutte import (
    BivarPoly,
    UnivarPoly,
    chromatic_polynomial,
    tutte_evaluate,
    tutte_polynomial,
)

__version__ = "0.1.0"

__all__ = [
    "BivarPoly",
    "ChowPresentation",
    "Cycle",
    "ExactMatrix",
    "Graph",
    "GroundSubset",
    "IsoWitness",
    "Matroid",
    "MinorWitness",
    "PolytopeVertices",
    "UnivarPoly",
    "chow_hilbert",
    "chow_presentation",
    "chromatic_polynomial",
    "closed_walks",
    "complete_graph",
    "component_count",
    "components",
    "contraction",
    "deletion",
    "direct_sum",
    "dual",
    "generalized_petersen",
    "get_cycles",
    "graph_from_edges",
    "graphic_matroid",
    "greedy",
    "has_minor",
    "isomorphism",
    "linear_matroid",
    "matroid_from_circuits",
    "matroid_from_nonbases",
    "minor",
    "polytope_vertices",
    "restriction",
    "specific_matroid",
    "tutte_evaluate",
    "tutte_polynomial",
    "uniform_matroid",
]
