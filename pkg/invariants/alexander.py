"""
Alexander polynomial and determinant of reduced stem diagrams.

Arcs of the diagram run from one under-passage to the next along the
traversal from the basepoint; arc k starts right after the k-th
under-passage. Each crossing gives one Wirtinger relation whose Fox
derivatives, abelianised to t, fill one row of the Alexander matrix.
"""
import logging
from functools import lru_cache
from typing import Any, Dict, List, Tuple

from pydantic import BaseModel, ConfigDict
from sympy import Symbol, ZZ
from sympy.polys.matrices import DomainMatrix

from core.errors import DegenerateDiagram
from core.permutations import PetalPermutation, Word
from diagram.stem_diagram import ReducedStemDiagram, petal_to_diagram
from invariants.laurent import LaurentPolynomial

logger = logging.getLogger(__name__)

T = Symbol("t")
_RING = ZZ[T]
_GEN = _RING.from_sympy(T)

_ONE = LaurentPolynomial.constant(1)
_T = LaurentPolynomial.monomial(1)


class AlexanderResult(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    polynomial: LaurentPolynomial
    determinant: int

    def coefficients(self) -> List[int]:
        return self.polynomial.coefficients()

    def to_json_dict(self) -> Dict[str, Any]:
        return {"alexander": self.coefficients(), "determinant": self.determinant}


def _result(polynomial: LaurentPolynomial) -> AlexanderResult:
    normalized = polynomial.normalize()
    return AlexanderResult(polynomial=normalized, determinant=abs(normalized.evaluate_at_minus_one()))


UNKNOT = _result(_ONE)


def wirtinger_arcs(diagram: ReducedStemDiagram) -> List[Tuple[int, int, int, int]]:
    """(crossing id, over arc, incoming under arc, outgoing under arc), by crossing id."""
    passages = diagram.passages()
    under_count = sum(1 for p in passages if not p.over)
    rows: Dict[int, List[int]] = {}
    seen_unders = 0
    for passage in passages:
        # the arc in progress started after the most recent under-passage
        current = (seen_unders - 1) % under_count
        row = rows.setdefault(passage.crossing, [0, 0, 0])
        if passage.over:
            row[0] = current
        else:
            row[1] = current
            row[2] = seen_unders
            seen_unders += 1
    return [(cid, *rows[cid]) for cid in sorted(rows)]


def alexander_matrix(diagram: ReducedStemDiagram) -> List[List[LaurentPolynomial]]:
    """Full N x N Alexander matrix, rows by crossing id, columns by arc."""
    size = len(diagram.crossings)
    matrix = [[LaurentPolynomial() for _ in range(size)] for _ in range(size)]
    for cid, over, incoming, outgoing in wirtinger_arcs(diagram):
        row = matrix[cid - 1]
        if diagram.crossing(cid).sign < 0:
            entries = ((over, _ONE - _T), (incoming, _T), (outgoing, -_ONE))
        else:
            entries = ((over, _ONE - _T), (incoming, -_ONE), (outgoing, _T))
        for column, value in entries:
            row[column] = row[column] + value
    return matrix


def _to_ring(poly: LaurentPolynomial):
    total = _RING.zero
    for exponent, coefficient in poly.terms.items():
        total += coefficient * _GEN ** exponent
    return total


def determinant_of_minor(matrix: List[List[LaurentPolynomial]]) -> LaurentPolynomial:
    """Determinant with the last row and column removed, by fraction-free elimination over Z[t]."""
    size = len(matrix) - 1
    if size <= 0:
        return _ONE
    rows = [[_to_ring(entry) for entry in row[:size]] for row in matrix[:size]]
    det = DomainMatrix(rows, (size, size), _RING).to_dense().det()
    return LaurentPolynomial({monom[0]: int(coefficient) for monom, coefficient in det.terms()})


def alexander_from_diagram(diagram: ReducedStemDiagram) -> AlexanderResult:
    if len(diagram.crossings) <= 1:
        return UNKNOT
    minor = determinant_of_minor(alexander_matrix(diagram))
    if minor.is_zero():
        raise DegenerateDiagram(f"Alexander minor of stem {diagram.stem} vanished")
    result = _result(minor)
    if abs(result.polynomial.evaluate(1)) != 1:
        raise DegenerateDiagram(f"Alexander polynomial {result.polynomial} of stem {diagram.stem} has |value at 1| != 1")
    logger.debug("stem %s: alexander %s, det %d", diagram.stem, result.polynomial, result.determinant)
    return result


@lru_cache(maxsize=65536)
def _alexander_of_word(word: Word) -> AlexanderResult:
    return alexander_from_diagram(petal_to_diagram(PetalPermutation.trusted(word)))


def alexander_of_petal(sigma: PetalPermutation) -> AlexanderResult:
    return _alexander_of_word(sigma.word)
