from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from core.errors import DoNotCross, MoveScriptError
from core.permutations import PetalPermutation, Side, StemPermutation, Strand, strands
from diagram.codes import gauss_code, parse_pd_code, pd_code, to_gauss_code, to_pd_code
from diagram.stem_diagram import (
    build_diagram,
    crossing_height,
    crossing_pairs,
    crossing_sign,
    petal_to_diagram,
    writhe,
)
from tests.knots import TREFOIL_STEM, UNKNOT_STEM, all_words

SAMPLES = 400


def half_circle(strand: Strand, samples: int = SAMPLES) -> np.ndarray:
    """Polyline of a strand's half-circle traversed from levels[0] to levels[1], in (x, level) coordinates."""
    a, b = strand.levels
    phi = np.linspace(0.0, np.pi, samples)
    x_sign = -1.0 if strand.side is Side.LEFT else 1.0
    x = x_sign * abs(b - a) / 2.0 * np.sin(phi)
    y = a + (b - a) * (1.0 - np.cos(phi)) / 2.0
    return np.column_stack([x, y])


def polylines_intersect(p: np.ndarray, q: np.ndarray) -> int:
    """Number of intersecting segment pairs between two polylines, touching included.

    Two half-circles can cross exactly at a shared sample vertex, so an endpoint
    lying on the other segment counts. A single crossing may be counted more than once.
    """
    p1, p2 = p[:-1, None, :], p[1:, None, :]
    q1, q2 = q[None, :-1, :], q[None, 1:, :]

    def orient(a, b, c):
        return np.sign((b[..., 0] - a[..., 0]) * (c[..., 1] - a[..., 1]) - (b[..., 1] - a[..., 1]) * (c[..., 0] - a[..., 0]))

    d1 = orient(q1, q2, p1)
    d2 = orient(q1, q2, p2)
    d3 = orient(p1, p2, q1)
    d4 = orient(p1, p2, q2)
    return int(np.count_nonzero((d1 * d2 <= 0) & (d3 * d4 <= 0)))


def tangent_at_level(strand: Strand, level: Fraction) -> np.ndarray:
    a, b = strand.levels
    x_sign = -1.0 if strand.side is Side.LEFT else 1.0
    cos_phi = 1.0 - 2.0 * float(level - a) / (b - a)
    phi = np.arccos(np.clip(cos_phi, -1.0, 1.0))
    return np.array([x_sign * abs(b - a) / 2.0 * np.cos(phi), (b - a) * np.sin(phi) / 2.0])


_ORACLE_CACHE = {}


def oracle_crosses(a: Strand, b: Strand) -> bool:
    key = (a.side, a.levels, b.levels)
    if key not in _ORACLE_CACHE:
        _ORACLE_CACHE[key] = polylines_intersect(half_circle(a), half_circle(b)) > 0
    return _ORACLE_CACHE[key]


def test_crossing_pairs_of_trefoil_stem():
    found = [(a.label, b.label) for a, b in crossing_pairs(StemPermutation(word=TREFOIL_STEM))]
    assert sorted(found) == sorted([("l0", "l2"), ("l1", "l2"), ("r1", "r2"), ("r1", "r3")])


@pytest.mark.parametrize("stem", [UNKNOT_STEM, (0, 1)])
def test_crossing_pairs_empty(stem):
    assert crossing_pairs(StemPermutation(word=stem)) == []


def test_crossing_height_examples():
    a = Strand(side=Side.LEFT, index=0, levels=(2, 4))
    b = Strand(side=Side.LEFT, index=2, levels=(3, 0))
    assert crossing_height(a, b) == Fraction(8, 3)
    assert crossing_height(b, a) == Fraction(8, 3)
    c = Strand(side=Side.RIGHT, index=1, levels=(0, 2))
    d = Strand(side=Side.RIGHT, index=2, levels=(1, 3))
    assert crossing_height(c, d) == Fraction(3, 2)


def test_crossing_height_rejects_non_crossing():
    nested = (Strand(side=Side.LEFT, index=0, levels=(0, 3)), Strand(side=Side.LEFT, index=1, levels=(1, 2)))
    with pytest.raises(DoNotCross):
        crossing_height(*nested)
    opposite = (Strand(side=Side.LEFT, index=0, levels=(0, 2)), Strand(side=Side.RIGHT, index=1, levels=(1, 3)))
    with pytest.raises(DoNotCross):
        crossing_height(*opposite)


def test_crossing_height_matches_geometry():
    a = Strand(side=Side.RIGHT, index=1, levels=(5, 1))
    b = Strand(side=Side.RIGHT, index=2, levels=(0, 3))
    height = crossing_height(a, b)
    for strand in (a, b):
        centre = sum(strand.levels) / 2
        radius = abs(strand.levels[0] - strand.levels[1]) / 2
        x_squared = radius ** 2 - (float(height) - centre) ** 2
        assert x_squared > 0
    # both circles give the same x at that height
    xa = (abs(a.levels[0] - a.levels[1]) / 2) ** 2 - (float(height) - sum(a.levels) / 2) ** 2
    xb = (abs(b.levels[0] - b.levels[1]) / 2) ** 2 - (float(height) - sum(b.levels) / 2) ** 2
    assert xa == pytest.approx(xb)


def test_polyline_oracle_counts_crossing_on_shared_vertex():
    # both arcs reach the crossing at a third of the way round, which is a sample vertex of each
    a = Strand(side=Side.RIGHT, index=1, levels=(1, 3))
    b = Strand(side=Side.RIGHT, index=2, levels=(2, 0))
    assert crossing_height(a, b) == Fraction(3, 2)
    assert (SAMPLES - 1) % 3 == 0
    assert polylines_intersect(half_circle(a), half_circle(b)) > 0
    assert oracle_crosses(a, b)
    apart = Strand(side=Side.RIGHT, index=3, levels=(4, 5))
    assert polylines_intersect(half_circle(a), half_circle(apart)) == 0


@pytest.mark.slow
@pytest.mark.parametrize("length", [2, 4, 6, 8])
def test_crossing_pairs_match_polyline_oracle(length):
    for word in all_words(length):
        stem = StemPermutation(word=word)
        found = {(a.traversal_index, b.traversal_index) for a, b in crossing_pairs(stem)}
        expected = set()
        for a, b in combinations(strands(stem), 2):
            if a.side is b.side and oracle_crosses(a, b):
                expected.add((a.traversal_index, b.traversal_index))
        assert found == expected, word


@pytest.mark.parametrize("length", [2, 4, 6])
def test_crossing_signs_match_tangent_oracle(length):
    for word in all_words(length):
        diagram = build_diagram(StemPermutation(word=word))
        for crossing in diagram.crossings:
            over, under = crossing.over, crossing.under
            t_over = tangent_at_level(over, crossing.height)
            t_under = tangent_at_level(under, crossing.height)
            expected = int(np.sign(t_over[0] * t_under[1] - t_over[1] * t_under[0]))
            assert crossing.sign == expected, (word, crossing.id)
            assert crossing_sign(over, under) == expected


def test_over_strand_rules():
    diagram = build_diagram(StemPermutation(word=TREFOIL_STEM))
    for crossing in diagram.crossings:
        a, b = crossing.strand_a, crossing.strand_b
        if crossing.side is Side.LEFT:
            assert crossing.over.index == max(a.index, b.index)
        else:
            assert crossing.over.index == min(a.index, b.index)


def test_build_diagram_trefoil_stem():
    diagram = build_diagram(StemPermutation(word=TREFOIL_STEM))
    assert len(diagram.crossings) == 4
    assert len(diagram.passages()) == 8
    assert abs(writhe(diagram)) in (2, 4)
    assert [c.id for c in diagram.crossings] == [1, 2, 3, 4]


def test_crossing_ids_follow_first_encounter():
    diagram = build_diagram(StemPermutation(word=(3, 0, 7, 1, 6, 2, 5, 4)))
    seen = []
    for passage in diagram.passages():
        if passage.crossing not in seen:
            seen.append(passage.crossing)
    assert seen == list(range(1, len(diagram.crossings) + 1))


@pytest.mark.parametrize("stem", [TREFOIL_STEM, (3, 0, 7, 1, 6, 2, 5, 4), (0, 5, 2, 7, 1, 4, 6, 3)])
def test_heights_monotone_along_strands(stem):
    diagram = build_diagram(StemPermutation(word=stem))
    for strand, ids in zip(diagram.strands, diagram.strand_crossings):
        heights = [diagram.crossing(cid).height for cid in ids]
        if strand.levels[0] < strand.levels[1]:
            assert heights == sorted(heights) and len(set(heights)) == len(heights)
        else:
            assert heights == sorted(heights, reverse=True) and len(set(heights)) == len(heights)


def test_unknot_diagrams():
    assert build_diagram(StemPermutation(word=UNKNOT_STEM)).crossings == ()
    assert petal_to_diagram(PetalPermutation(word=(0,))).crossings == ()
    assert to_gauss_code(StemPermutation(word=UNKNOT_STEM)).passages == ()


def test_gauss_code_structure():
    code = to_gauss_code(StemPermutation(word=TREFOIL_STEM))
    assert len(code.passages) == 8
    for cid in range(1, 5):
        assert code.passages.count(cid) == 1
        assert code.passages.count(-cid) == 1
    text = code.to_text().split()
    assert len(text) == 8 and all(token[0] in "OU" and token[-1] in "+-" for token in text)


@pytest.mark.parametrize("stem", [TREFOIL_STEM, (3, 0, 7, 1, 6, 2, 5, 4)])
def test_pd_code_labels_appear_twice(stem):
    code = to_pd_code(StemPermutation(word=stem))
    labels = [label for quad in code.crossings for label in quad]
    assert sorted(set(labels)) == list(range(1, len(labels) // 2 + 1))
    assert all(labels.count(label) == 2 for label in set(labels))


def test_pd_code_text_round_trip():
    diagram = build_diagram(StemPermutation(word=TREFOIL_STEM))
    code = pd_code(diagram)
    parsed = parse_pd_code(code.to_text())
    assert parsed == code
    assert parsed.incidence() == code.incidence()


def test_parse_pd_code_rejects_garbage():
    with pytest.raises(MoveScriptError):
        parse_pd_code("PD[X[1,2,3,4], Y[1]]")


def test_gauss_signs_follow_crossings():
    diagram = build_diagram(StemPermutation(word=(0, 5, 2, 7, 1, 4, 6, 3)))
    code = gauss_code(diagram)
    for passage, sign in zip(code.passages, code.signs):
        assert diagram.crossing(abs(passage)).sign == sign
