"""
Reduced stem diagrams.

Plane model: the axis is the line x = 0 and a point at level k sits at
(0, k). Every strand is a half-circle with its diameter on the axis, left
strands in x < 0 and right strands in x > 0. Two strands on the same side
cross exactly once when their endpoint levels interleave, and never otherwise.

Crossing signs use the frame (x, y = level): sign = sgn(T_over x T_under).
"""
import logging
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict

from core.errors import DoNotCross
from core.permutations import PetalPermutation, Side, StemPermutation, Strand, petal_to_stem, strands

logger = logging.getLogger(__name__)


class Crossing(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    id: int
    strand_a: Strand
    strand_b: Strand
    over: Strand
    height: Fraction
    sign: int

    @property
    def side(self) -> Side:
        return self.strand_a.side

    @property
    def under(self) -> Strand:
        return self.strand_b if self.over == self.strand_a else self.strand_a


class Passage(BaseModel):
    """One visit to a crossing while traversing the knot from the basepoint."""

    model_config = ConfigDict(frozen=True)

    crossing: int
    over: bool
    sign: int


class ReducedStemDiagram(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    stem: StemPermutation
    strands: Tuple[Strand, ...]
    crossings: Tuple[Crossing, ...]
    # crossing ids met along each strand, indexed like ``strands``
    strand_crossings: Tuple[Tuple[int, ...], ...]

    def crossing(self, crossing_id: int) -> Crossing:
        return self.crossings[crossing_id - 1]

    def passages(self) -> List[Passage]:
        result = []
        for strand, ids in zip(self.strands, self.strand_crossings):
            for crossing_id in ids:
                crossing = self.crossing(crossing_id)
                result.append(Passage(crossing=crossing_id, over=crossing.over == strand, sign=crossing.sign))
        return result


def _quadruple_product(a: Strand, b: Strand) -> int:
    d1, d2 = a.levels
    l1, l2 = b.levels
    return (d1 - l1) * (d2 - l1) * (d1 - l2) * (d2 - l2)


def crossing_pairs(tau: StemPermutation) -> List[Tuple[Strand, Strand]]:
    """Same-side strand pairs that cross, in traversal order of the first strand."""
    result = []
    for a, b in combinations(strands(tau), 2):
        if a.side is b.side and _quadruple_product(a, b) < 0:
            result.append((a, b))
    return result


def crossing_height(a: Strand, b: Strand) -> Fraction:
    """Exact level coordinate of the intersection of two crossing half-circles."""
    if a.side is not b.side or _quadruple_product(a, b) >= 0:
        raise DoNotCross(f"{a} and {b} do not cross")
    p, q = a.levels
    r, s = b.levels
    return Fraction(p * q - r * s, p + q - r - s)


def _direction(strand: Strand) -> int:
    """+1 when the strand is traversed towards increasing level."""
    return 1 if strand.levels[0] < strand.levels[1] else -1


def _over_strand(a: Strand, b: Strand) -> Strand:
    # left: the later strand passes over; right: the earlier strand passes over
    if a.side is Side.LEFT:
        return a if a.index > b.index else b
    return a if a.index < b.index else b


def crossing_sign(over: Strand, under: Strand) -> int:
    side_factor = 1 if over.side is Side.RIGHT else -1
    centre_gap = sum(over.levels) - sum(under.levels)
    return _direction(over) * _direction(under) * side_factor * (1 if centre_gap > 0 else -1)


def build_diagram(tau: StemPermutation) -> ReducedStemDiagram:
    strand_list = strands(tau)
    raw = []
    for a, b in crossing_pairs(tau):
        over = _over_strand(a, b)
        under = b if over == a else a
        raw.append((a, b, over, crossing_height(a, b), crossing_sign(over, under)))

    along: Dict[int, List[Tuple[Fraction, int]]] = {k: [] for k in range(len(strand_list))}
    for number, (a, b, _, height, _) in enumerate(raw):
        along[a.traversal_index].append((height, number))
        along[b.traversal_index].append((height, number))

    # ids follow the order in which crossings are first met from the basepoint
    ids: Dict[int, int] = {}
    ordered: List[List[int]] = []
    for k, strand in enumerate(strand_list):
        visits = sorted(along[k], reverse=_direction(strand) < 0)
        for _, number in visits:
            ids.setdefault(number, len(ids) + 1)
        ordered.append([number for _, number in visits])

    crossings = [None] * len(raw)
    for number, (a, b, over, height, sign) in enumerate(raw):
        crossings[ids[number] - 1] = Crossing(
            id=ids[number], strand_a=a, strand_b=b, over=over, height=height, sign=sign
        )
    diagram = ReducedStemDiagram(
        stem=tau,
        strands=tuple(strand_list),
        crossings=tuple(crossings),
        strand_crossings=tuple(tuple(ids[number] for number in row) for row in ordered),
    )
    logger.debug("stem %s: %d crossings, writhe %d", tau, len(crossings), writhe(diagram))
    return diagram


def petal_to_diagram(sigma: PetalPermutation) -> ReducedStemDiagram:
    """Diagram under the default embedding: rotation 0 of the canonical word, t_0 = 0."""
    return build_diagram(petal_to_stem(sigma, 0, 0))


def writhe(diagram: ReducedStemDiagram) -> int:
    return sum(c.sign for c in diagram.crossings)
