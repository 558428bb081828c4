"""
Uniform random petal permutations, a model of random knots.
"""
import logging
from typing import Iterator, Optional

import numpy as np

from config.settings import get_sampling_config
from core.errors import LevelOutOfRange
from core.permutations import PetalPermutation

logger = logging.getLogger(__name__)


def _rng(seed: Optional[int]) -> np.random.Generator:
    config = get_sampling_config()
    if seed is None:
        seed = config["seed"]
    bit_generator = getattr(np.random, config["generator"])
    return np.random.Generator(bit_generator(seed))


def _draw(rng: np.random.Generator, n: int) -> PetalPermutation:
    tail = rng.permutation(np.arange(1, 2 * n + 1))
    return PetalPermutation.trusted((0,) + tuple(int(v) for v in tail))


def random_petal(n: int, seed: Optional[int] = None) -> PetalPermutation:
    """Uniform over the (2n)! petal permutations with 2n+1 petals."""
    if n < 0:
        raise LevelOutOfRange(f"n must be non-negative, got {n}")
    sigma = _draw(_rng(seed), n)
    logger.debug("random petal n=%d seed=%s: %s", n, seed, sigma)
    return sigma


def iter_random_petals(n: int, seed: Optional[int] = None, count: Optional[int] = None) -> Iterator[PetalPermutation]:
    """Stream of independent uniform draws from one seeded generator."""
    if n < 0:
        raise LevelOutOfRange(f"n must be non-negative, got {n}")
    rng = _rng(seed)
    drawn = 0
    while count is None or drawn < count:
        yield _draw(rng, n)
        drawn += 1
