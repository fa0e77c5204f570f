"""Tamari lattices, the dendriform operad and noncrossing trees.

The package covers planar binary trees and the Tamari order on them,
integer combinations of trees with the non-symmetric operad composition,
the associative star and # products, noncrossing trees and plants with
their gluing operad and the map into tree combinations, projective
elements and their pivot combinatorics, the Coxeter-type transforms
theta and tau, and 0/1 tri-modules over products of Tamari quivers whose
tensor functors decategorify to the products.

Everything is exact integer or rational arithmetic; ``tamari verify``
runs the named verification suites from the command line.
"""

from .dendriform import DendElem
from .errors import DegreeError, InternalInvariantError, TamariError
from .lattice import TamariPoset, build_poset, euler, euler_form
from .noncrossing import NCPlant
from .trees import Tree, enumerate_trees, from_text

__version__ = "0.1.0"

__all__ = [
    "DegreeError",
    "DendElem",
    "InternalInvariantError",
    "NCPlant",
    "TamariError",
    "TamariPoset",
    "Tree",
    "build_poset",
    "enumerate_trees",
    "euler",
    "euler_form",
    "from_text",
    "__version__",
]
