"""Mahonian statistics on permutations, ordered set partitions and rook placements."""

from .perm import Permutation
from .starred import AscentStarred, DescentStarred, OrderedSetPartition, PrimedStarred

__all__ = [
    "Permutation", "DescentStarred", "AscentStarred", "PrimedStarred", "OrderedSetPartition",
]
__version__ = "0.1.0"
