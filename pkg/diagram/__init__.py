"""
Diagram module - Contains reduced stem diagrams and their Gauss and PD codes.
"""
from diagram.codes import GaussCode, PDCode, gauss_code, parse_pd_code, pd_code, to_gauss_code, to_pd_code
from diagram.stem_diagram import (
    Crossing,
    Passage,
    ReducedStemDiagram,
    build_diagram,
    crossing_height,
    crossing_pairs,
    crossing_sign,
    petal_to_diagram,
    writhe,
)

__all__ = [
    "Crossing",
    "GaussCode",
    "PDCode",
    "Passage",
    "ReducedStemDiagram",
    "build_diagram",
    "crossing_height",
    "crossing_pairs",
    "crossing_sign",
    "gauss_code",
    "parse_pd_code",
    "pd_code",
    "petal_to_diagram",
    "to_gauss_code",
    "to_pd_code",
    "writhe",
]
