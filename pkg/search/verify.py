"""
Certificate checking for move paths.
"""
import logging
from typing import Optional

from pydantic import BaseModel, ConfigDict

from core.errors import IllegalMoveAtStep, InvariantChangedAtStep, PetalkitError, ReplayMismatchAtStep
from core.permutations import PetalPermutation
from invariants.alexander import AlexanderResult, alexander_of_petal
from moves.petal_moves import apply_move
from search.path_search import MovePath

logger = logging.getLogger(__name__)


class VerificationReport(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    ok: bool = True
    moves: int
    end: PetalPermutation
    invariant_checked: bool
    alexander: Optional[AlexanderResult] = None

    def summary(self) -> str:
        suffix = ", invariant preserved" if self.invariant_checked else ""
        return f"OK ({self.moves} moves{suffix})"


def verify_path(path: MovePath, check_invariants: bool = True) -> VerificationReport:
    """Replay every move of path, raising a step-indexed error at the first failure."""
    expected = alexander_of_petal(path.start) if check_invariants else None
    if path.steps is not None and len(path.steps) != len(path.moves):
        step = min(len(path.steps), len(path.moves)) + 1
        raise ReplayMismatchAtStep(step, f"path lists {len(path.steps)} steps for {len(path.moves)} moves")

    current = path.start
    for step, move in enumerate(path.moves, start=1):
        try:
            current = apply_move(current, move)
        except PetalkitError as exc:
            raise IllegalMoveAtStep(step, f"step {step} ({move.describe()}): {exc.name}: {exc.message}") from exc
        if path.steps is not None and path.steps[step - 1].word != current.word:
            raise ReplayMismatchAtStep(
                step, f"step {step} produces {current}, path records {path.steps[step - 1]}"
            )
        if expected is not None:
            found = alexander_of_petal(current)
            if found.to_json_dict() != expected.to_json_dict():
                raise InvariantChangedAtStep(
                    step, f"step {step} changes the Alexander polynomial from {expected.polynomial} to {found.polynomial}"
                )

    if path.end is not None and path.end.word != current.word:
        raise ReplayMismatchAtStep(len(path.moves), f"replay ends at {current}, path records {path.end}")
    logger.info("verified %d moves from %s to %s", len(path.moves), path.start, current)
    return VerificationReport(
        moves=len(path.moves), end=current, invariant_checked=check_invariants, alexander=expected
    )
