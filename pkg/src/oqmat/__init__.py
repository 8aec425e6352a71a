"""Exact symbolic computation in the quantum matrix algebra O_q(M_n).

Coefficients live in Z[q, q^-1]; elements are kept in PBW normal form.
"""

from .errors import OqmatError
from .gradedideal import GradedIdeal, ideal_membership
from .pbwcore import Element, Hom, Presentation
from .qcoeff import LaurentInt
from .qmatrix import X, comultiply, counit, minor, oqm_presentation, quantum_minor, transpose_tau
from .textio import parse_element, serialize

__version__ = "0.1.0"

__all__ = [
    "OqmatError",
    "GradedIdeal",
    "ideal_membership",
    "Element",
    "Hom",
    "Presentation",
    "LaurentInt",
    "X",
    "comultiply",
    "counit",
    "minor",
    "oqm_presentation",
    "quantum_minor",
    "transpose_tau",
    "parse_element",
    "serialize",
]
