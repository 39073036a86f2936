"""Exact (g, h)-oriented edge colouring of multigraphs and the decompositions
it yields: pseudoforests, degree-f forests, linear forests, f-colourings."""

from .graph import INF, DegreeFunction, FunctionPair, InvalidPairError, Multigraph, require_valid, validate_pair
from .orientation import Certificate, Orientation, is_orientable, max_partial_orientation, verify_orientation
from .bipartite import BipartiteMultigraph, galvin_list_color, konig_color
from .chromatic import EdgeColoring, IndexReport, chi_gh, decompose_gh, delta_gh, list_decompose_gh, w_gh_exhaustive
from .decompositions import (
    DecompositionResult,
    a_f_decompose,
    f_color,
    linear_arboricity_decompose,
    pa_f_decompose,
    pseudoarboricity,
)

__version__ = "0.1.0"
