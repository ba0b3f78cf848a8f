"""Exact computations in the type D generalized Khovanov arc algebra.

Weights and blocks, decorated cup diagrams, the signed surgery product,
graded cellular data, the generator and relation presentation and the
orthosymplectic weight dictionary.
"""

from .algebra import BasisVector, Element, basis, multiply, multiply_basis, s_scalar, star, unit
from .diagrams import (
    CapDiagram,
    CircleDiagram,
    CupDiagram,
    bullet_index,
    cap_diagram,
    components,
    cup_diagram,
    lambda_pairs,
    mirror,
    orient,
    orientations,
    weight_of_cup,
)
from .f2 import multiply_f2
from .laurent import GradedMatrix, LaurentPoly
from .repr import cartan_matrix, cell_basis, cell_filtration, cell_radical_layers, decomposition_matrix, quiver
from .weights import Block, Weight, WeightError, bruhat_leq, principal_block, weights_in_block

pos = bullet_index
parse_weight = Weight.parse

__all__ = [
    "BasisVector", "Block", "CapDiagram", "CircleDiagram", "CupDiagram", "Element", "GradedMatrix",
    "LaurentPoly", "Weight", "WeightError", "basis", "bruhat_leq", "bullet_index", "cap_diagram",
    "cartan_matrix", "cell_basis", "cell_filtration", "cell_radical_layers", "components", "cup_diagram",
    "decomposition_matrix", "lambda_pairs", "mirror", "multiply", "multiply_basis", "multiply_f2",
    "orient", "orientations", "parse_weight", "pos", "principal_block", "quiver", "s_scalar", "star",
    "unit", "weight_of_cup", "weights_in_block",
]
