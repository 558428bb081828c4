"""
Moves module - Contains the petal moves and the move-script format.
"""
from moves.models import (
    CrossingExchange,
    Move,
    TrivialAddition,
    TrivialDeletion,
    ValidationReport,
    move_key,
    move_to_json,
    parse_move,
)
from moves.petal_moves import (
    apply_crossing_exchange,
    apply_move,
    apply_stem_trivial_addition,
    apply_trivial_addition,
    apply_trivial_deletion,
    enumerate_legal_moves,
    find_deletable_pairs,
    invert_move,
    validate_crossing_exchange,
)
from moves.scripts import dump_move_script, load_move_script, replay_script

__all__ = [
    "CrossingExchange",
    "Move",
    "TrivialAddition",
    "TrivialDeletion",
    "ValidationReport",
    "apply_crossing_exchange",
    "apply_move",
    "apply_stem_trivial_addition",
    "apply_trivial_addition",
    "apply_trivial_deletion",
    "dump_move_script",
    "enumerate_legal_moves",
    "find_deletable_pairs",
    "invert_move",
    "load_move_script",
    "move_key",
    "move_to_json",
    "parse_move",
    "replay_script",
    "validate_crossing_exchange",
]
