"""rainbowtri: extremal edge-colored planar triangulations.

Construct the two extremal families, color them with their closed-form
colorings, machine-certify every checkable claim (properness, absence of
rainbow cycles, connectivity, degree structure), and decide arbitrary small
instances with an exhaustive backtracking oracle.
"""

from .coloring import (EdgeColoring, barrel_coloring, parse_coloring,
                       serialize_coloring, strip_coloring)
from .families import (FIXTURE_NAMES, LabeledTriangulation, build_barrel,
                       build_fixture, build_strip, parse_graph, serialize_graph)
from .kernels import available_backends, default_backend
from .search import (PrecheckVerdict, SearchOutcome, SearchProblem,
                     greedy_proper_coloring, precheck, solve)
from .triangulation import (ConnectivityReport, PlanarTriangulation,
                            canonical_cycle, canonical_edge, connectivity_class,
                            cycle_edges, degree_census, degree_sequence,
                            enumerate_cycles, is_separating_cycle,
                            rotations_from_faces, trace_faces)
from .verify import (CertificateReport, certify, check_c4_obstructions,
                     check_proper, count_rainbow_cycles, find_rainbow_cycle,
                     has_c4_obstructions, neighborhood_rainbow_check)

__version__ = "0.1.0"

__all__ = [
    "CertificateReport",
    "ConnectivityReport",
    "EdgeColoring",
    "FIXTURE_NAMES",
    "LabeledTriangulation",
    "PlanarTriangulation",
    "PrecheckVerdict",
    "SearchOutcome",
    "SearchProblem",
    "available_backends",
    "barrel_coloring",
    "build_barrel",
    "build_fixture",
    "build_strip",
    "canonical_cycle",
    "canonical_edge",
    "certify",
    "check_c4_obstructions",
    "check_proper",
    "connectivity_class",
    "count_rainbow_cycles",
    "cycle_edges",
    "default_backend",
    "degree_census",
    "degree_sequence",
    "enumerate_cycles",
    "find_rainbow_cycle",
    "greedy_proper_coloring",
    "has_c4_obstructions",
    "is_separating_cycle",
    "neighborhood_rainbow_check",
    "parse_coloring",
    "parse_graph",
    "precheck",
    "rotations_from_faces",
    "serialize_coloring",
    "serialize_graph",
    "solve",
    "strip_coloring",
    "trace_faces",
]
