"""
Search module - Contains move-graph path search, path verification and random petal sampling.
"""
from search.path_search import MovePath, SearchConfig, canonical_key, find_path
from search.sampling import iter_random_petals, random_petal
from search.verify import VerificationReport, verify_path

__all__ = [
    "MovePath",
    "SearchConfig",
    "VerificationReport",
    "canonical_key",
    "find_path",
    "iter_random_petals",
    "random_petal",
    "verify_path",
]
