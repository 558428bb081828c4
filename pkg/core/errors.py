"""
Error hierarchy shared by every petalkit package.

Each error exposes a stable ``name`` used by the CLI as the machine-readable
error identifier.
"""
from typing import Any, Dict, Optional


class PetalkitError(Exception):
    """Base class for all domain errors."""

    name = "PetalkitError"

    def __init__(self, message: str = ""):
        super().__init__(message or self.name)
        self.message = message or self.name

    def to_dict(self) -> Dict[str, Any]:
        return {"error": self.name, "message": self.message}


class ConfigurationError(PetalkitError):
    name = "ConfigurationError"


# permutations

class NotAPermutation(PetalkitError):
    name = "NotAPermutation"


class EvenLength(PetalkitError):
    name = "EvenLength"


class OddLength(PetalkitError):
    name = "OddLength"


class InvalidRotation(PetalkitError):
    name = "InvalidRotation"


class LevelOutOfRange(PetalkitError):
    name = "LevelOutOfRange"


# moves

class PositionOutOfRange(PetalkitError):
    name = "PositionOutOfRange"


class NotConsecutivePair(PetalkitError):
    name = "NotConsecutivePair"


class SingletonUnderflow(PetalkitError):
    name = "SingletonUnderflow"


class PairsNotFound(PetalkitError):
    name = "PairsNotFound"


class BasepointPairInvolved(PetalkitError):
    name = "BasepointPairInvolved"


class NestingViolation(PetalkitError):
    name = "NestingViolation"

    def __init__(self, message: str = "", offending_pair: Optional[tuple] = None):
        super().__init__(message)
        self.offending_pair = offending_pair

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        if self.offending_pair is not None:
            data["offending_pair"] = list(self.offending_pair)
        return data


class BadLevels(PetalkitError):
    name = "BadLevels"


class NotApplicable(PetalkitError):
    name = "NotApplicable"


class MoveScriptError(PetalkitError):
    name = "MoveScriptError"


# diagrams and invariants

class DoNotCross(PetalkitError):
    name = "DoNotCross"


class DegenerateDiagram(PetalkitError):
    name = "DegenerateDiagram"


# search

class InvariantMismatch(PetalkitError):
    name = "InvariantMismatch"


class BoundsExhausted(PetalkitError):
    name = "BoundsExhausted"


class StepError(PetalkitError):
    """A path verification failure located at a 1-based move index."""

    name = "StepError"

    def __init__(self, step: int, message: str = ""):
        super().__init__(message or f"{self.name} at step {step}")
        self.step = step

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data["step"] = self.step
        return data


class IllegalMoveAtStep(StepError):
    name = "IllegalMoveAtStep"


class ReplayMismatchAtStep(StepError):
    name = "ReplayMismatchAtStep"


class InvariantChangedAtStep(StepError):
    name = "InvariantChangedAtStep"


# Crossing-exchange violations reported by validation, keyed by error name.
EXCHANGE_ERRORS = {
    cls.name: cls
    for cls in (PairsNotFound, BasepointPairInvolved, NestingViolation, BadLevels, LevelOutOfRange)
}
