"""
Core module - Contains petal and stem permutation types and the conversions between them.
"""
from core.errors import PetalkitError
from core.permutations import (
    Orientation,
    Pairing,
    PetalPermutation,
    Rotation,
    Side,
    StemPermutation,
    Strand,
    canonicalize_petal,
    format_word,
    mirror_petal,
    pairing,
    parse_word,
    petal_to_stem,
    reverse_petal,
    rotate_word,
    rotations,
    stem_embeddings,
    stem_to_petal,
    strand_pair_correspondence,
    strands,
)

__all__ = [
    "Orientation",
    "Pairing",
    "PetalPermutation",
    "PetalkitError",
    "Rotation",
    "Side",
    "StemPermutation",
    "Strand",
    "canonicalize_petal",
    "format_word",
    "mirror_petal",
    "pairing",
    "parse_word",
    "petal_to_stem",
    "reverse_petal",
    "rotate_word",
    "rotations",
    "stem_embeddings",
    "stem_to_petal",
    "strand_pair_correspondence",
    "strands",
]
