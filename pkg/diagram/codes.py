"""
Gauss and PD codes of reduced stem diagrams.

Gauss code: signed crossing ids in traversal order from the basepoint (+id
over, -id under) with a parallel list of crossing signs.

PD code: arcs are numbered 1..2N along the traversal, the arc entering the
k-th passage being k (the arc entering passage 0 is 2N). Each crossing is
X[a,b,c,d] listed counterclockwise from the incoming under-arc.
"""
import re
from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict

from core.errors import MoveScriptError
from core.permutations import StemPermutation
from diagram.stem_diagram import ReducedStemDiagram, build_diagram

_PD_CROSSING = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")


class GaussCode(BaseModel):
    model_config = ConfigDict(frozen=True)

    passages: Tuple[int, ...]
    signs: Tuple[int, ...]

    def to_text(self) -> str:
        return " ".join(
            f"{'O' if p > 0 else 'U'}{abs(p)}{'+' if s > 0 else '-'}" for p, s in zip(self.passages, self.signs)
        )


class PDCode(BaseModel):
    model_config = ConfigDict(frozen=True)

    crossings: Tuple[Tuple[int, int, int, int], ...]

    def to_text(self) -> str:
        return "PD[" + ", ".join(f"X[{a},{b},{c},{d}]" for a, b, c, d in self.crossings) + "]"

    def incidence(self) -> Dict[int, List[int]]:
        """Arc label -> positions (crossing index) where it occurs."""
        table: Dict[int, List[int]] = {}
        for index, quad in enumerate(self.crossings):
            for label in quad:
                table.setdefault(label, []).append(index)
        return table


def gauss_code(diagram: ReducedStemDiagram) -> GaussCode:
    passages = diagram.passages()
    return GaussCode(
        passages=tuple(p.crossing if p.over else -p.crossing for p in passages),
        signs=tuple(p.sign for p in passages),
    )


def pd_code(diagram: ReducedStemDiagram) -> PDCode:
    passages = diagram.passages()
    total = len(passages)
    seen: Dict[int, Dict[str, int]] = {}
    for position, passage in enumerate(passages):
        entering = position if position > 0 else total
        leaving = position + 1
        seen.setdefault(passage.crossing, {})
        role = "over" if passage.over else "under"
        seen[passage.crossing][role + "_in"] = entering
        seen[passage.crossing][role + "_out"] = leaving
    quads = []
    for crossing in diagram.crossings:
        arcs = seen[crossing.id]
        if crossing.sign > 0:
            quads.append((arcs["under_in"], arcs["over_out"], arcs["under_out"], arcs["over_in"]))
        else:
            quads.append((arcs["under_in"], arcs["over_in"], arcs["under_out"], arcs["over_out"]))
    return PDCode(crossings=tuple(quads))


def to_gauss_code(tau: StemPermutation) -> GaussCode:
    return gauss_code(build_diagram(tau))


def to_pd_code(tau: StemPermutation) -> PDCode:
    return pd_code(build_diagram(tau))


def parse_pd_code(text: str) -> PDCode:
    body = text.strip()
    quads = [tuple(int(v) for v in match) for match in _PD_CROSSING.findall(body)]
    leftover = _PD_CROSSING.sub("", body)
    if re.sub(r"[\s,\[\]]|PD", "", leftover):
        raise MoveScriptError(f"unreadable PD code: {text!r}")
    return PDCode(crossings=tuple(quads))
