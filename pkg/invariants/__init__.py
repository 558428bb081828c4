"""
Invariants module - Contains Laurent polynomial arithmetic and the Alexander polynomial of petal knots.
"""
from invariants.alexander import (
    AlexanderResult,
    alexander_from_diagram,
    alexander_matrix,
    alexander_of_petal,
    wirtinger_arcs,
)
from invariants.laurent import LaurentPolynomial

__all__ = [
    "AlexanderResult",
    "LaurentPolynomial",
    "alexander_from_diagram",
    "alexander_matrix",
    "alexander_of_petal",
    "wirtinger_arcs",
]
