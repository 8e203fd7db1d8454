"""Linear Weingarten surfaces of revolution.

Constant Gauss curvature profile curves in closed form (Jacobi elliptic
functions), surfaces of revolution and tubes, parallel offset families,
discriminant-based classification of the linear Weingarten condition
a K + 2b H + c = 0, and export to OBJ / CSV / SVG / JSON.
"""

from .elliptic import (
    BACKEND,
    EllipticModulus,
    JacobiTriple,
    elliptic_E_am,
    elliptic_E_incomplete,
    jacobi,
    make_modulus,
)
from .errors import (
    DegenerateJet,
    DomainError,
    FocalPoint,
    FormulaSingular,
    ImmersionError,
    InvalidTriple,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DegenerateJet",
    "DomainError",
    "EllipticModulus",
    "FocalPoint",
    "FormulaSingular",
    "ImmersionError",
    "InvalidTriple",
    "JacobiTriple",
    "elliptic_E_am",
    "elliptic_E_incomplete",
    "jacobi",
    "make_modulus",
    "__version__",
]
