"""Brute-force ground truth: explicit enumeration of all subtrees.

Every connected vertex subset is generated exactly once by growing it from
its minimum-id vertex (the anchor), so totals need no dedup corrections.
This module is deliberately simple and independent of the recurrence
engine in ``stats``; it exists to check that engine and is budgeted to
order 20.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator

from .errors import BudgetExceededError
from .stats import SubtreeStats
from .tree import Tree

__all__ = [
    "ENUMERATION_MAX_ORDER",
    "SubtreeProfile",
    "connected_sets",
    "enumerate_profile",
    "oracle_stats",
]

ENUMERATION_MAX_ORDER = 20


@dataclass(frozen=True)
class SubtreeProfile:
    """Subtree counts of a tree, bucketed by order."""

    count_by_order: Dict[int, int]

    @property
    def n_t(self) -> int:
        return sum(self.count_by_order.values())

    @property
    def r_t(self) -> int:
        return sum(k * c for k, c in self.count_by_order.items())


def _check_budget(t: Tree):
    if t.n > ENUMERATION_MAX_ORDER:
        raise BudgetExceededError(
            f"subtree enumeration is budgeted to order {ENUMERATION_MAX_ORDER}, got {t.n}")


def connected_sets(t: Tree) -> Iterator[int]:
    """All connected vertex subsets of t as bitmasks, each exactly once.

    For each anchor a, grows subsets within vertices >= a: a connected set
    is extended by one neighbor at a time, and a neighbor once skipped at a
    branch point stays forbidden below it, so no subset appears twice.
    """
    _check_budget(t)
    n = t.n
    nbr = [0] * n
    for u, v in t.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u

    def grow(members: int, frontier: int, forbidden: int, above: int):
        yield members
        taken = 0
        m = frontier & ~forbidden
        while m:
            bit = m & -m
            v = bit.bit_length() - 1
            yield from grow(members | bit,
                            (frontier | (nbr[v] & above)) & ~(members | bit),
                            forbidden | taken,
                            above)
            taken |= bit
            m &= m - 1

    for a in range(n):
        above = ~((1 << (a + 1)) - 1)
        yield from grow(1 << a, nbr[a] & above, 0, above)


def enumerate_profile(t: Tree) -> SubtreeProfile:
    """Exact subtree profile of t by explicit enumeration."""
    counts: Dict[int, int] = {}
    for members in connected_sets(t):
        k = bin(members).count("1")
        counts[k] = counts.get(k, 0) + 1
    return SubtreeProfile(count_by_order=counts)


def oracle_stats(t: Tree, v: int) -> SubtreeStats:
    """Exact quadruple for (t, v) by explicit enumeration."""
    if not (0 <= v < t.n):
        raise ValueError(f"vertex {v} is not in the tree")
    n_v = r_v = n_t = r_t = 0
    bit = 1 << v
    for members in connected_sets(t):
        k = bin(members).count("1")
        n_t += 1
        r_t += k
        if members & bit:
            n_v += 1
            r_v += k
    return SubtreeStats(n_v=n_v, r_v=r_v, n_t=n_t, r_t=r_t)
