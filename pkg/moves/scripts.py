"""
Move scripts: a JSON array whose first element is the initial petal word,
followed by one move object per step.
"""
import logging
from typing import Any, List, Sequence, Tuple

from core.errors import MoveScriptError, PetalkitError
from core.permutations import PetalPermutation, parse_word
from moves.models import Move, move_to_json, parse_move
from moves.petal_moves import apply_move

logger = logging.getLogger(__name__)


def load_move_script(data: Any) -> Tuple[PetalPermutation, List[Move]]:
    if not isinstance(data, list) or not data:
        raise MoveScriptError("a move script is a non-empty JSON array starting with a petal word")
    head = data[0]
    if isinstance(head, str):
        head = parse_word(head)
    if not isinstance(head, (list, tuple)):
        raise MoveScriptError(f"the first script entry must be a petal word, got {head!r}")
    try:
        start = PetalPermutation(word=head)
    except PetalkitError as exc:
        raise MoveScriptError(f"bad initial word: {exc.message}") from exc
    return start, [parse_move(item) for item in data[1:]]


def dump_move_script(start: PetalPermutation, moves: Sequence[Move]) -> List[Any]:
    return [list(start.word)] + [move_to_json(move) for move in moves]


def replay_script(start: PetalPermutation, moves: Sequence[Move]) -> List[PetalPermutation]:
    """Words after each move, in order."""
    steps = []
    current = start
    for move in moves:
        current = apply_move(current, move)
        steps.append(current)
    logger.debug("replayed %d moves from %s", len(steps), start)
    return steps
