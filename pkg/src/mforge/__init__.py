"""Exact construction and verification of minuscule representations from lattice polytopes."""

from .analysis import (
    crystal_graph,
    extreme_vectors,
    irreducibility_certificate,
    weight,
    weight_poset,
)
from .cartan import CartanMatrix, cartan_matrix, classify_cartan
from .catalog import build, expected, instances
from .core import (
    MinusculeSystem,
    SimpleSystem,
    c_value,
    dumps_system,
    loads_system,
    make_system,
    validate_system,
)
from .errors import MforgeError
from .geometry import bifid, intersection_number, line_labels, support_check
from .ops import LinearOperator, build_operators, check_all, check_generator_identities, check_presentation
from .weyl import edge_root_system, orbit, orbits_on_pairs, reflect

__all__ = [
    "CartanMatrix",
    "LinearOperator",
    "MforgeError",
    "MinusculeSystem",
    "SimpleSystem",
    "bifid",
    "build",
    "build_operators",
    "c_value",
    "cartan_matrix",
    "check_all",
    "check_generator_identities",
    "check_presentation",
    "classify_cartan",
    "crystal_graph",
    "dumps_system",
    "edge_root_system",
    "expected",
    "extreme_vectors",
    "instances",
    "intersection_number",
    "irreducibility_certificate",
    "line_labels",
    "loads_system",
    "make_system",
    "orbit",
    "orbits_on_pairs",
    "reflect",
    "support_check",
    "validate_system",
    "weight",
    "weight_poset",
]
