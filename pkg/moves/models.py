"""
Pydantic models for the three petal moves.

JSON form, one object per move:
    {"type":"add","rotation":r,"pos":j,"m":m,"orient":"asc"|"desc"}
    {"type":"del","rotation":r,"pos":k}
    {"type":"xchg","rotation":r,"side":"L"|"R","m":m,"w":w}
"""
import json
from typing import Annotated, Any, Dict, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, ValidationError

from core.errors import MoveScriptError
from core.permutations import Orientation, Side


class TrivialAddition(BaseModel):
    """Insert m(m+1) or (m+1)m after index ``position`` of the rotated word."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    type: Literal["add"] = "add"
    rotation: int = 0
    position: int = Field(alias="pos")
    m: int
    orientation: Orientation = Field(alias="orient")

    def describe(self) -> str:
        pair = (self.m, self.m + 1) if self.orientation is Orientation.ASCENDING else (self.m + 1, self.m)
        return f"add ({pair[0]},{pair[1]}) after index {self.position} of rotation {self.rotation}"


class TrivialDeletion(BaseModel):
    """Delete the cyclically adjacent consecutive-value pair starting at ``position``."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    type: Literal["del"] = "del"
    rotation: int = 0
    position: int = Field(alias="pos")

    def describe(self) -> str:
        return f"delete the pair at index {self.position} of rotation {self.rotation}"


class CrossingExchange(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    type: Literal["xchg"] = "xchg"
    rotation: int = 0
    side: Side
    m: int
    w: int

    def describe(self) -> str:
        side = "left" if self.side is Side.LEFT else "right"
        return f"exchange {self.m}<->{self.m + 1} and {self.w}<->{self.w + 1} on the {side} pairs of rotation {self.rotation}"


Move = Annotated[Union[TrivialAddition, TrivialDeletion, CrossingExchange], Field(discriminator="type")]

_MOVE_ADAPTER = TypeAdapter(Move)


class ValidationReport(BaseModel):
    """Outcome of checking a crossing exchange against a petal permutation."""

    model_config = ConfigDict(frozen=True)

    ok: bool
    error: Optional[str] = None
    message: str = ""
    offending_pair: Optional[Tuple[int, ...]] = None


def parse_move(data: Any) -> Move:
    try:
        return _MOVE_ADAPTER.validate_python(data)
    except ValidationError as exc:
        raise MoveScriptError(f"invalid move {data!r}: {exc.errors()[0]['msg']}") from exc


def move_to_json(move: Move) -> Dict[str, Any]:
    return move.model_dump(mode="json", by_alias=True)


def move_key(move: Move) -> str:
    """Compact JSON text; the deterministic tie-break order for moves."""
    return json.dumps(move_to_json(move), separators=(",", ":"))
