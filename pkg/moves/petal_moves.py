"""
Trivial petal additions and deletions, crossing exchanges.

The public functions take and return PetalPermutation / Move models. The
``*_word`` helpers work on plain tuples and back both the public functions and
the neighbour generation used by the search package.
"""
import json
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from core.errors import (
    EXCHANGE_ERRORS,
    LevelOutOfRange,
    NestingViolation,
    NotApplicable,
    NotConsecutivePair,
    PetalkitError,
    PositionOutOfRange,
    SingletonUnderflow,
)
from core.permutations import (
    Orientation,
    PetalPermutation,
    Side,
    StemPermutation,
    Word,
    canonical_word,
    endpoint_sets,
    rotate_word,
    word_pairs,
)
from moves.models import (
    CrossingExchange,
    Move,
    TrivialAddition,
    TrivialDeletion,
    ValidationReport,
)

logger = logging.getLogger(__name__)

# Raw move specs used on the search hot path:
#   ("add", rotation, pos, m, orient) | ("del", rotation, pos) | ("xchg", rotation, side, m, w)
MoveSpec = Tuple


def add_pair_word(w: Sequence[int], position: int, m: int, orientation: Orientation) -> Word:
    """g_m-shift every entry and insert the pair after index ``position``."""
    shifted = [a if a < m else a + 2 for a in w]
    pair = [m, m + 1] if orientation is Orientation.ASCENDING else [m + 1, m]
    return tuple(shifted[: position + 1] + pair + shifted[position + 1:])


def delete_pair_word(w: Sequence[int], position: int) -> Word:
    size = len(w)
    if size == 1:
        raise SingletonUnderflow("cannot delete a petal pair from a single petal")
    if not 0 <= position < size:
        raise PositionOutOfRange(f"position {position} is not in 0..{size - 1}")
    second = (position + 1) % size
    x, y = w[position], w[second]
    if abs(x - y) != 1:
        raise NotConsecutivePair(f"entries {x} and {y} are not consecutive values")
    low = min(x, y)
    return tuple(v - 2 if v > low + 1 else v for i, v in enumerate(w) if i not in (position, second))


def exchange_word(w: Sequence[int], m: int, w_level: int) -> Word:
    swap = {m: m + 1, m + 1: m, w_level: w_level + 1, w_level + 1: w_level}
    return tuple(swap.get(v, v) for v in w)


def exchange_violation(w: Sequence[int], side: Side, m: int, w_level: int) -> Optional[Tuple[str, str, Optional[tuple]]]:
    """Return (error name, message, offending pair) or None when the exchange is legal."""
    if w_level < m + 2:
        return "BadLevels", f"w={w_level} must be at least m+2={m + 2}", None
    if m < 0 or w_level + 1 > len(w) - 1:
        return "LevelOutOfRange", f"levels {m}..{w_level + 1} exceed 0..{len(w) - 1}", None
    pairs = word_pairs(w, side)
    basepoint = pairs[0] if side is Side.LEFT else pairs[-1]
    if basepoint[0] in (m, m + 1, w_level, w_level + 1):
        return "BasepointPairInvolved", f"basepoint pair ({basepoint[0]}) cannot take part in an exchange", basepoint
    endpoints = endpoint_sets(pairs)
    for needed in (frozenset((m, w_level + 1)), frozenset((m + 1, w_level))):
        if needed not in endpoints:
            return "PairsNotFound", f"no {side.value}-pair with endpoints {sorted(needed)}", None
    low, high = m + 2, w_level - 1
    for pair in pairs:
        inside = [low <= v <= high for v in pair]
        if any(inside) and not all(inside):
            return "NestingViolation", f"pair {pair} straddles the interval [{low},{high}]", pair
    return None


def _spec_json(spec: MoveSpec) -> dict:
    kind = spec[0]
    if kind == "add":
        return {"type": "add", "rotation": spec[1], "pos": spec[2], "m": spec[3], "orient": spec[4].value}
    if kind == "del":
        return {"type": "del", "rotation": spec[1], "pos": spec[2]}
    return {"type": "xchg", "rotation": spec[1], "side": spec[2].value, "m": spec[3], "w": spec[4]}


def spec_key(spec: MoveSpec) -> str:
    return json.dumps(_spec_json(spec), separators=(",", ":"))


def spec_to_move(spec: MoveSpec) -> Move:
    kind = spec[0]
    if kind == "add":
        return TrivialAddition(rotation=spec[1], position=spec[2], m=spec[3], orientation=spec[4])
    if kind == "del":
        return TrivialDeletion(rotation=spec[1], position=spec[2])
    return CrossingExchange(rotation=spec[1], side=spec[2], m=spec[3], w=spec[4])


def neighbour_specs(word: Word, level_cap: Optional[int] = None) -> List[Tuple[Word, str, MoveSpec]]:
    """All legal single moves on a canonical word, one per distinct result.

    Returns (result word, move key, move spec) sorted by result word; for each
    result the spec with the smallest key is kept.
    """
    size = len(word)
    best: Dict[Word, Tuple[str, MoveSpec]] = {}

    def offer(result: Word, spec: MoveSpec) -> None:
        result = canonical_word(result)
        key = spec_key(spec)
        current = best.get(result)
        if current is None or key < current[0]:
            best[result] = (key, spec)

    if size > 1:
        for k in range(size):
            if abs(word[k] - word[(k + 1) % size]) == 1:
                offer(delete_pair_word(word, k), ("del", 0, k))

    for offset in range(size):
        w = word[offset:] + word[:offset]
        for side in (Side.LEFT, Side.RIGHT):
            pairs = word_pairs(w, side)
            endpoints = endpoint_sets(pairs)
            for pair in pairs:
                if len(pair) != 2:
                    continue
                m, w_level = min(pair), max(pair) - 1
                if w_level < m + 2 or frozenset((m + 1, w_level)) not in endpoints:
                    continue
                if exchange_violation(w, side, m, w_level) is None:
                    offer(exchange_word(w, m, w_level), ("xchg", offset, side, m, w_level))

    if level_cap is not None and size + 2 <= level_cap:
        for position in range(size):
            for m in range(size + 1):
                for orientation in (Orientation.ASCENDING, Orientation.DESCENDING):
                    offer(add_pair_word(word, position, m, orientation), ("add", 0, position, m, orientation))

    return [(result, key, spec) for result, (key, spec) in sorted(best.items())]


def apply_trivial_addition(sigma: PetalPermutation, addition: TrivialAddition) -> PetalPermutation:
    size = len(sigma.word)
    w = rotate_word(sigma, addition.rotation)
    if not 0 <= addition.position < size:
        raise PositionOutOfRange(f"insertion index {addition.position} is not in 0..{size - 1}")
    if not 0 <= addition.m <= size:
        raise LevelOutOfRange(f"m={addition.m} is not in 0..{size}")
    result = add_pair_word(w, addition.position, addition.m, addition.orientation)
    return PetalPermutation.trusted(canonical_word(result))


def find_deletable_pairs(sigma: PetalPermutation) -> List[TrivialDeletion]:
    word = sigma.word
    size = len(word)
    if size == 1:
        return []
    return [
        TrivialDeletion(rotation=0, position=k)
        for k in range(size)
        if abs(word[k] - word[(k + 1) % size]) == 1
    ]


def apply_trivial_deletion(sigma: PetalPermutation, deletion: TrivialDeletion) -> PetalPermutation:
    w = rotate_word(sigma, deletion.rotation)
    return PetalPermutation.trusted(canonical_word(delete_pair_word(w, deletion.position)))


def validate_crossing_exchange(sigma: PetalPermutation, exchange: CrossingExchange) -> ValidationReport:
    w = rotate_word(sigma, exchange.rotation)
    violation = exchange_violation(w, exchange.side, exchange.m, exchange.w)
    if violation is None:
        return ValidationReport(ok=True)
    error, message, pair = violation
    return ValidationReport(ok=False, error=error, message=message, offending_pair=pair)


def apply_crossing_exchange(sigma: PetalPermutation, exchange: CrossingExchange) -> PetalPermutation:
    report = validate_crossing_exchange(sigma, exchange)
    if not report.ok:
        if report.error == NestingViolation.name:
            raise NestingViolation(report.message, offending_pair=report.offending_pair)
        raise EXCHANGE_ERRORS[report.error](report.message)
    w = rotate_word(sigma, exchange.rotation)
    return PetalPermutation.trusted(canonical_word(exchange_word(w, exchange.m, exchange.w)))


def apply_move(sigma: PetalPermutation, move: Move) -> PetalPermutation:
    if isinstance(move, TrivialAddition):
        result = apply_trivial_addition(sigma, move)
    elif isinstance(move, TrivialDeletion):
        result = apply_trivial_deletion(sigma, move)
    else:
        result = apply_crossing_exchange(sigma, move)
    logger.debug("%s: %s -> %s", move.describe(), sigma, result)
    return result


def enumerate_legal_moves(
    sigma: PetalPermutation, level_cap: Optional[int] = None
) -> List[Tuple[Move, PetalPermutation]]:
    """Legal moves on sigma, deduplicated by resulting canonical word.

    Additions are only offered when ``level_cap`` is given and the grown word
    (length 2n+3) fits under it.
    """
    return [
        (spec_to_move(spec), PetalPermutation.trusted(result))
        for result, _, spec in neighbour_specs(sigma.word, level_cap)
    ]


def _rotation_of(after: PetalPermutation, w: Sequence[int]) -> int:
    return after.word.index(w[0])


def invert_move(move: Move, sigma_before: PetalPermutation) -> Move:
    """The move taking apply_move(sigma_before, move) back to sigma_before."""
    try:
        after = apply_move(sigma_before, move)
    except PetalkitError as exc:
        raise NotApplicable(f"{move.describe()} does not apply to {sigma_before}: {exc.message}") from exc

    if isinstance(move, TrivialAddition):
        first, second = (move.m, move.m + 1)
        if move.orientation is Orientation.DESCENDING:
            first, second = second, first
        position = after.word.index(first)
        return TrivialDeletion(rotation=0, position=position)

    if isinstance(move, TrivialDeletion):
        w = rotate_word(sigma_before, move.rotation)
        size = len(w)
        k = move.position
        x, y = w[k], w[(k + 1) % size]
        low = min(x, y)
        if k + 1 < size:
            remaining = w[:k] + w[k + 2:]
            position = k - 1 if k >= 1 else size - 3
        else:
            remaining = w[1:size - 1]
            position = size - 3
        remaining = tuple(v - 2 if v > low + 1 else v for v in remaining)
        orientation = Orientation.ASCENDING if x < y else Orientation.DESCENDING
        return TrivialAddition(
            rotation=_rotation_of(after, remaining), position=position, m=low, orientation=orientation
        )

    w_after = exchange_word(rotate_word(sigma_before, move.rotation), move.m, move.w)
    return CrossingExchange(rotation=_rotation_of(after, w_after), side=move.side, m=move.m, w=move.w)


def apply_stem_trivial_addition(
    tau: StemPermutation, position: int, m: int, orientation: Orientation
) -> StemPermutation:
    """Trivial petal addition expressed on a stem permutation (insert after t_position)."""
    size = len(tau.word)
    if not 0 <= position < size:
        raise PositionOutOfRange(f"insertion index {position} is not in 0..{size - 1}")
    if not 0 <= m <= size:
        raise LevelOutOfRange(f"m={m} is not in 0..{size}")
    return StemPermutation.trusted(add_pair_word(tau.word, position, m, orientation))
