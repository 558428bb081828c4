"""
Petal and stem permutation value types.

A petal permutation is a cyclic word on 0..2n; it is always stored in the
rotation that begins with 0, so two petal permutations are equal exactly when
their words are cyclic rotations of each other. A stem permutation is a linear
word on 0..2n+1 whose first entry is the level of the basepoint.
"""
import logging
from enum import Enum
from typing import Any, Dict, FrozenSet, Iterator, List, Sequence, Set, Tuple, Union

from pydantic import BaseModel, ConfigDict, field_validator

from core.errors import (
    EvenLength,
    InvalidRotation,
    LevelOutOfRange,
    NotAPermutation,
    OddLength,
)

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]


class Side(str, Enum):
    LEFT = "L"
    RIGHT = "R"


class Orientation(str, Enum):
    """Order of the inserted pair in a trivial petal addition."""
    ASCENDING = "asc"
    DESCENDING = "desc"


def _as_levels(word: Sequence[Any]) -> Word:
    try:
        values = tuple(int(v) for v in word)
    except (TypeError, ValueError) as exc:
        raise NotAPermutation(f"not a word of integers: {word!r}") from exc
    if sorted(values) != list(range(len(values))):
        raise NotAPermutation(f"{list(values)} is not a permutation of 0..{len(values) - 1}")
    return values


def canonical_word(word: Sequence[int]) -> Word:
    """Rotate a valid petal word so that it begins with 0."""
    start = word.index(0)
    return tuple(word[start:]) + tuple(word[:start])


class PetalPermutation(BaseModel):
    """Cyclic word of distinct integers 0..2n, stored starting at 0."""

    model_config = ConfigDict(frozen=True)

    word: Word

    @field_validator("word", mode="before")
    @classmethod
    def _canonical_rotation(cls, value: Any) -> Word:
        levels = _as_levels(value)
        if len(levels) % 2 == 0:
            raise EvenLength(f"petal words have odd length, got {len(levels)}")
        return canonical_word(levels)

    @classmethod
    def trusted(cls, word: Word) -> "PetalPermutation":
        """Wrap a word already known to be a canonical petal word."""
        return cls.model_construct(word=word)

    @property
    def n(self) -> int:
        return (len(self.word) - 1) // 2

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return format_word(self.word)

    def to_json_dict(self) -> Dict[str, Any]:
        return {"kind": "petal", "word": list(self.word)}


class StemPermutation(BaseModel):
    """Linear word of distinct integers 0..2n+1; entry 0 is the basepoint level t_0."""

    model_config = ConfigDict(frozen=True)

    word: Word

    @field_validator("word", mode="before")
    @classmethod
    def _check(cls, value: Any) -> Word:
        levels = _as_levels(value)
        if not levels:
            raise NotAPermutation("stem words are never empty")
        if len(levels) % 2 == 1:
            raise OddLength(f"stem words have even length, got {len(levels)}")
        return levels

    @classmethod
    def trusted(cls, word: Word) -> "StemPermutation":
        return cls.model_construct(word=word)

    @property
    def n(self) -> int:
        return len(self.word) // 2 - 1

    @property
    def basepoint_level(self) -> int:
        return self.word[0]

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return format_word(self.word)

    def to_json_dict(self) -> Dict[str, Any]:
        return {"kind": "stem", "word": list(self.word)}


class Rotation(BaseModel):
    """Offset selecting the word W = word[offset:] + word[:offset] of a petal permutation."""

    model_config = ConfigDict(frozen=True)

    offset: int = 0


RotationLike = Union[Rotation, int]


def rotation_offset(r: RotationLike, length: int) -> int:
    offset = r.offset if isinstance(r, Rotation) else int(r)
    if not 0 <= offset < length:
        raise InvalidRotation(f"rotation {offset} is not in 0..{length - 1}")
    return offset


class Pairing(BaseModel):
    """Left- or right-pairs of a word W; the singleton is the basepoint pair."""

    model_config = ConfigDict(frozen=True)

    side: Side
    pairs: Tuple[Tuple[int, ...], ...]

    @property
    def basepoint_index(self) -> int:
        return 0 if self.side is Side.LEFT else len(self.pairs) - 1

    @property
    def basepoint_pair(self) -> Tuple[int, ...]:
        return self.pairs[self.basepoint_index]

    def word(self) -> Word:
        return tuple(v for pair in self.pairs for v in pair)


class Strand(BaseModel):
    """A left-strand l_j or right-strand r_i with its endpoint levels in traversal order."""

    model_config = ConfigDict(frozen=True)

    side: Side
    index: int
    levels: Tuple[int, int]

    @property
    def label(self) -> str:
        return f"{'l' if self.side is Side.LEFT else 'r'}{self.index}"

    @property
    def traversal_index(self) -> int:
        return 2 * self.index if self.side is Side.LEFT else 2 * self.index - 1

    @property
    def level_set(self) -> frozenset:
        return frozenset(self.levels)

    def __str__(self) -> str:
        return f"{self.label}{{{self.levels[0]},{self.levels[1]}}}"


def canonicalize_petal(word: Sequence[int]) -> PetalPermutation:
    return PetalPermutation(word=word)


def rotate_word(sigma: PetalPermutation, r: RotationLike = 0) -> Word:
    offset = rotation_offset(r, len(sigma.word))
    return sigma.word[offset:] + sigma.word[:offset]


def rotations(sigma: PetalPermutation) -> List[Rotation]:
    return [Rotation(offset=i) for i in range(len(sigma.word))]


def word_pairs(w: Sequence[int], side: Side) -> List[Tuple[int, ...]]:
    """Split a word into left- or right-pairs."""
    size = len(w)
    if side is Side.LEFT:
        return [(w[0],)] + [(w[i], w[i + 1]) for i in range(1, size, 2)]
    return [(w[i], w[i + 1]) for i in range(0, size - 1, 2)] + [(w[size - 1],)]


def endpoint_sets(pairs: Sequence[Tuple[int, ...]]) -> Set[FrozenSet[int]]:
    """Unordered endpoint sets of two-element pairs, for membership tests."""
    return {frozenset(pair) for pair in pairs if len(pair) == 2}


def pairing(sigma: PetalPermutation, r: RotationLike = 0, side: Union[Side, str] = Side.LEFT) -> Pairing:
    w = rotate_word(sigma, r)
    side = Side(side)
    return Pairing(side=side, pairs=tuple(word_pairs(w, side)))


def stem_to_petal(tau: StemPermutation) -> PetalPermutation:
    """Drop the basepoint level and close the gap it leaves."""
    t0 = tau.word[0]
    petal = tuple(a if a <= t0 else a - 1 for a in tau.word[1:])
    return PetalPermutation.trusted(canonical_word(petal))


def petal_to_stem(sigma: PetalPermutation, r: RotationLike = 0, t0: int = 0) -> StemPermutation:
    w = rotate_word(sigma, r)
    if not 0 <= t0 <= len(w):
        raise LevelOutOfRange(f"basepoint level {t0} is not in 0..{len(w)}")
    return StemPermutation.trusted((t0,) + tuple(a + 1 if a >= t0 else a for a in w))


def strands(tau: StemPermutation) -> List[Strand]:
    """Strands l_0, r_1, l_1, ..., l_n, r_{n+1} in traversal order."""
    word = tau.word
    size = len(word)
    result = []
    for k in range(size):
        levels = (word[k], word[(k + 1) % size])
        if k % 2 == 0:
            result.append(Strand(side=Side.LEFT, index=k // 2, levels=levels))
        else:
            result.append(Strand(side=Side.RIGHT, index=(k + 1) // 2, levels=levels))
    return result


def strand_pair_correspondence(
    sigma: PetalPermutation, r: RotationLike = 0, t0: int = 0
) -> Dict[Strand, Tuple[int, ...]]:
    """Match each strand of petal_to_stem(sigma, r, t0) with its left- or right-pair."""
    left = pairing(sigma, r, Side.LEFT).pairs
    right = pairing(sigma, r, Side.RIGHT).pairs
    mapping = {}
    for strand in strands(petal_to_stem(sigma, r, t0)):
        if strand.side is Side.LEFT:
            mapping[strand] = left[strand.index]
        else:
            mapping[strand] = right[strand.index - 1]
    return mapping


def stem_embeddings(sigma: PetalPermutation) -> Iterator[Tuple[Rotation, int, StemPermutation]]:
    """Every (basepoint petal, basepoint level) choice of stem permutation for sigma."""
    for rotation in rotations(sigma):
        for t0 in range(len(sigma.word) + 1):
            yield rotation, t0, petal_to_stem(sigma, rotation, t0)


def mirror_petal(sigma: PetalPermutation) -> PetalPermutation:
    top = len(sigma.word) - 1
    return PetalPermutation.trusted(canonical_word(tuple(top - p for p in sigma.word)))


def reverse_petal(sigma: PetalPermutation) -> PetalPermutation:
    return PetalPermutation.trusted(canonical_word(tuple(reversed(sigma.word))))


def parse_word(text: str) -> Word:
    """Parse comma-separated decimal levels such as ``0,3,1,4,2``."""
    cleaned = text.strip().strip("()[]").strip()
    if not cleaned:
        raise NotAPermutation(f"empty word: {text!r}")
    try:
        return tuple(int(token) for token in cleaned.split(","))
    except ValueError as exc:
        raise NotAPermutation(f"cannot parse word {text!r}") from exc


def format_word(word: Sequence[int]) -> str:
    """Display form, multi-digit entries parenthesised: ``(0298647(10)135)``."""
    return "(" + "".join(str(v) if v < 10 else f"({v})" for v in word) + ")"


def permutation_from_json(data: Any) -> Union[PetalPermutation, StemPermutation]:
    """Read ``{"kind": ..., "word": [...]}``, or a bare array told apart by parity."""
    if isinstance(data, dict):
        kind = data.get("kind")
        word = data.get("word")
        if kind == "petal":
            return PetalPermutation(word=word)
        if kind == "stem":
            return StemPermutation(word=word)
        raise NotAPermutation(f"unknown permutation kind {kind!r}")
    if isinstance(data, (list, tuple)):
        if len(data) % 2 == 1:
            return PetalPermutation(word=data)
        return StemPermutation(word=data)
    raise NotAPermutation(f"not a permutation: {data!r}")
