"""
Breadth-first search for move sequences between petal permutations.

Nodes are canonical words. Every move has an inverse move, so the move graph
is undirected and the backward half of a bidirectional search uses the same
neighbour relation as the forward half. Frontiers are expanded one whole
level at a time. Once the length of a shortest path is known, the path is
rebuilt from the start by always taking the move with the least serialization
that stays on a shortest path, so both search modes and any thread count
return the same path.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Set, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from config.settings import get_search_config
from core.errors import BoundsExhausted, ConfigurationError, InvariantMismatch
from core.permutations import PetalPermutation, Word
from invariants.alexander import alexander_of_petal
from moves.models import Move
from moves.petal_moves import MoveSpec, apply_move, neighbour_specs, spec_to_move
from moves.scripts import dump_move_script, load_move_script

logger = logging.getLogger(__name__)

# visited word -> number of moves from the search root
Depths = Dict[Word, int]


class SearchConfig(BaseModel):
    """Bounds and switches for find_path; petal_bound None is derived from the endpoints."""

    model_config = ConfigDict(frozen=True)

    petal_bound: Optional[int] = None
    depth_bound: int = Field(default=6, ge=0)
    bidirectional: bool = True
    invariant_prefilter: bool = True
    threads: int = Field(default=1, ge=1)

    @field_validator("petal_bound")
    @classmethod
    def _odd_bound(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and (value < 1 or value % 2 == 0):
            raise ValueError(f"petal_bound must be a positive odd number, got {value}")
        return value

    @classmethod
    def from_settings(cls, **overrides: Any) -> "SearchConfig":
        settings = get_search_config()
        values = {key: settings[key] for key in cls.model_fields}
        values.update({key: value for key, value in overrides.items() if value is not None})
        try:
            return cls(**values)
        except ValidationError as exc:
            raise ConfigurationError(f"invalid search configuration: {exc.errors()[0]['msg']}") from exc

    def resolved_petal_bound(self, start: PetalPermutation, goal: PetalPermutation) -> int:
        longest = max(len(start), len(goal))
        if self.petal_bound is None:
            return longest + get_search_config()["petal_margin"]
        if self.petal_bound < longest:
            raise ConfigurationError(f"petal_bound {self.petal_bound} is shorter than an endpoint ({longest})")
        return self.petal_bound


class MovePath(BaseModel):
    """A move sequence with the word reached after each move."""

    model_config = ConfigDict(frozen=True)

    start: PetalPermutation
    moves: Tuple[Move, ...] = ()
    end: Optional[PetalPermutation] = None
    steps: Optional[Tuple[PetalPermutation, ...]] = None

    def __len__(self) -> int:
        return len(self.moves)

    def to_json_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"script": dump_move_script(self.start, self.moves)}
        if self.steps is not None:
            data["steps"] = [list(step.word) for step in self.steps]
        if self.end is not None:
            data["end"] = list(self.end.word)
        return data

    @classmethod
    def from_json(cls, data: Any) -> "MovePath":
        """Read a MovePath object or a bare move script (steps and end left unset)."""
        if isinstance(data, dict) and "script" in data:
            start, moves = load_move_script(data["script"])
            steps = data.get("steps")
            end = data.get("end")
            return cls(
                start=start,
                moves=tuple(moves),
                steps=None if steps is None else tuple(PetalPermutation(word=s) for s in steps),
                end=None if end is None else PetalPermutation(word=end),
            )
        start, moves = load_move_script(data)
        return cls(start=start, moves=tuple(moves))


def canonical_key(sigma: Union[PetalPermutation, Sequence[int]]) -> Word:
    """Hashable token equal for two inputs exactly when they are the same petal permutation."""
    if isinstance(sigma, PetalPermutation):
        return sigma.word
    return PetalPermutation(word=sigma).word


@lru_cache(maxsize=131072)
def _neighbours(word: Word, level_cap: int) -> Tuple[Tuple[Word, str, MoveSpec], ...]:
    """Distinct neighbours of a word, ordered by the serialization of the move reaching them."""
    return tuple(sorted(neighbour_specs(word, level_cap), key=lambda item: item[1]))


def _expand(frontier: List[Word], level_cap: int, threads: int) -> List[Tuple[Tuple[Word, str, MoveSpec], ...]]:
    if threads > 1 and len(frontier) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(lambda word: _neighbours(word, level_cap), frontier))
    return [_neighbours(word, level_cap) for word in frontier]


def _shortest_layers(
    length: int, forward: Depths, backward: Depths, reach: int, level_cap: int
) -> List[Set[Word]]:
    """Words lying on some shortest path, grouped by their distance from the start.

    ``backward`` holds every word within ``reach`` moves of the goal. ``forward`` holds
    every word nearer the start than ``length - reach``, and at least those at that
    distance which ``backward`` also holds.
    """
    pivot = max(length - reach, 0)
    layers: List[Set[Word]] = [set() for _ in range(length + 1)]
    layers[pivot] = {
        word for word, depth in forward.items() if depth == pivot and backward.get(word) == length - pivot
    }
    for index in range(pivot - 1, -1, -1):
        layers[index] = {
            result
            for word in layers[index + 1]
            for result, _, _ in _neighbours(word, level_cap)
            if forward.get(result) == index
        }
    for index in range(pivot + 1, length + 1):
        layers[index] = {
            result
            for word in layers[index - 1]
            for result, _, _ in _neighbours(word, level_cap)
            if backward.get(result) == length - index
        }
    return layers


def _lexicographic_path(
    start: Word, length: int, forward: Depths, backward: Depths, reach: int, level_cap: int
) -> MovePath:
    """The shortest path whose move serializations are lexicographically least."""
    layers = _shortest_layers(length, forward, backward, reach, level_cap)
    current = PetalPermutation.trusted(start)
    moves: List[Move] = []
    steps = []
    for index in range(1, length + 1):
        # neighbours come in key order, so the first one on a shortest path is the least
        _, _, spec = next(item for item in _neighbours(current.word, level_cap) if item[0] in layers[index])
        move = spec_to_move(spec)
        current = apply_move(current, move)
        moves.append(move)
        steps.append(current)
    return MovePath(start=PetalPermutation.trusted(start), moves=tuple(moves), end=current, steps=tuple(steps))


def _unidirectional(start: Word, goal: Word, level_cap: int, cfg: SearchConfig) -> Optional[MovePath]:
    depths: Depths = {start: 0}
    frontier = [start]
    for depth in range(1, cfg.depth_bound + 1):
        next_frontier: List[Word] = []
        for neighbours in _expand(frontier, level_cap, cfg.threads):
            for result, _, _ in neighbours:
                if result in depths:
                    continue
                depths[result] = depth
                if result == goal:
                    logger.info("reached goal at depth %d after visiting %d words", depth, len(depths))
                    return _lexicographic_path(start, depth, depths, {goal: 0}, 0, level_cap)
                next_frontier.append(result)
        logger.debug("depth %d: frontier %d, visited %d", depth, len(next_frontier), len(depths))
        if not next_frontier:
            break
        frontier = next_frontier
    return None


def _bidirectional(start: Word, goal: Word, level_cap: int, cfg: SearchConfig) -> Optional[MovePath]:
    sides = {
        "forward": {"depth": {start: 0}, "frontier": [start], "level": 0},
        "backward": {"depth": {goal: 0}, "frontier": [goal], "level": 0},
    }
    while sides["forward"]["level"] + sides["backward"]["level"] < cfg.depth_bound:
        forward, backward = sides["forward"], sides["backward"]
        if not forward["frontier"] or not backward["frontier"]:
            return None
        name = "forward" if len(forward["frontier"]) <= len(backward["frontier"]) else "backward"
        this, other = sides[name], sides["backward" if name == "forward" else "forward"]

        shortest: Optional[int] = None
        next_frontier: List[Word] = []
        for node, neighbours in zip(this["frontier"], _expand(this["frontier"], level_cap, cfg.threads)):
            for result, _, _ in neighbours:
                if result in other["depth"]:
                    total = this["depth"][node] + 1 + other["depth"][result]
                    if shortest is None or total < shortest:
                        shortest = total
                if result in this["depth"]:
                    continue
                this["depth"][result] = this["depth"][node] + 1
                next_frontier.append(result)
        this["frontier"] = next_frontier
        this["level"] += 1
        logger.debug(
            "%s level %d: frontier %d, visited %d", name, this["level"], len(next_frontier), len(this["depth"])
        )

        if shortest is not None:
            logger.info("%s search met the other side, path length %d", name, shortest)
            # both depth maps are complete up to their levels, and the levels sum to at least `shortest`
            return _lexicographic_path(
                start, shortest, forward["depth"], backward["depth"], backward["level"], level_cap
            )
    return None


def find_path(
    sigma: PetalPermutation, sigma_prime: PetalPermutation, cfg: Optional[SearchConfig] = None
) -> MovePath:
    """Shortest move sequence from sigma to sigma_prime within the configured bounds."""
    cfg = cfg or SearchConfig.from_settings()
    level_cap = cfg.resolved_petal_bound(sigma, sigma_prime)
    start, goal = canonical_key(sigma), canonical_key(sigma_prime)

    if cfg.invariant_prefilter:
        left, right = alexander_of_petal(sigma), alexander_of_petal(sigma_prime)
        if left.to_json_dict() != right.to_json_dict():
            raise InvariantMismatch(
                f"{sigma} has Alexander polynomial {left.polynomial}, {sigma_prime} has {right.polynomial}"
            )
        logger.info("prefilter passed: both sides have Alexander polynomial %s", left.polynomial)

    if start == goal:
        return MovePath(start=sigma, moves=(), end=sigma, steps=())

    search = _bidirectional if cfg.bidirectional else _unidirectional
    path = search(start, goal, level_cap, cfg)
    if path is None:
        raise BoundsExhausted(
            f"no path from {sigma} to {sigma_prime} within depth {cfg.depth_bound} and petal bound {level_cap}"
        )
    return path
