"""Tree generation: exhaustive non-isomorphic enumeration and seeded
random labeled trees.

``all_trees(n)`` walks canonical level sequences with the classic
successor rule for rooted trees, restricted to the canonical free-tree
form (centroid-balanced first subtree), so each isomorphism class of free
trees appears exactly once without any dedup memory.  ``random_tree``
decodes a seeded Prüfer sequence and is therefore uniform over labeled
trees.  ``bruteforce_classes`` is the independent oracle the generator is
checked against: decode every Prüfer sequence and dedup by canonical code.
"""

from __future__ import annotations

import os
import random
from typing import Iterator

from ._backend import kernels
from .errors import BudgetExceededError
from .tree import Tree

__all__ = [
    "DEFAULT_MAX_ORDER",
    "max_order",
    "all_trees",
    "random_tree",
    "prufer_to_edges",
    "bruteforce_classes",
    "BRUTEFORCE_MAX_ORDER",
]

DEFAULT_MAX_ORDER = 14
BRUTEFORCE_MAX_ORDER = 9


def max_order() -> int:
    """Generation budget: MST_MAX_N from the environment, default 14."""
    return int(os.environ.get("MST_MAX_N", DEFAULT_MAX_ORDER))


# ---------------------------------------------------------------------------
# canonical level-sequence enumeration

def _successor(level, p=None):
    """Next rooted level sequence in the canonical (decreasing) order."""
    if p is None:
        p = len(level) - 1
        while level[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while level[q] != level[p] - 1:
        q -= 1
    nxt = list(level)
    for i in range(p, len(nxt)):
        nxt[i] = nxt[i - p + q]
    return nxt


def _split_first_subtree(level):
    """First subtree of the root (levels shifted down) and the remainder."""
    m = None
    seen_one = False
    for i, x in enumerate(level):
        if x == 1:
            if seen_one:
                m = i
                break
            seen_one = True
    if m is None:
        m = len(level)
    left = [level[i] - 1 for i in range(1, m)]
    rest = [0] + level[m:]
    return left, rest


def _coerce_free(level):
    """Return `level` if it canonically represents a free tree, otherwise
    jump ahead to the next level sequence that does.

    Canonical free form: the first root subtree is no higher than the rest
    of the tree, and on equal height it is no bigger, and on equal size no
    later lexicographically.
    """
    left, rest = _split_first_subtree(level)
    left_height = max(left)
    rest_height = max(rest)
    valid = rest_height >= left_height
    if valid and rest_height == left_height:
        if len(left) > len(rest):
            valid = False
        elif len(left) == len(rest) and left > rest:
            valid = False
    if valid:
        return level
    p = len(left)
    nxt = _successor(level, p)
    if level[p] > 2:
        new_left, _ = _split_first_subtree(nxt)
        suffix = range(1, max(new_left) + 2)
        nxt[-len(suffix):] = suffix
    return nxt


def _level_to_tree(level) -> Tree:
    edges = []
    stack = []
    for i, depth in enumerate(level):
        while stack and level[stack[-1]] >= depth:
            stack.pop()
        if stack:
            edges.append((stack[-1], i))
        stack.append(i)
    return Tree(len(level), edges)


def all_trees(n: int, *, shard_index: int = 0, shard_count: int = 1) -> Iterator[Tree]:
    """Yield one representative per isomorphism class of free trees of
    order n.

    The iterator can be partitioned for parallel scans: with shard_count
    shards, shard k yields the trees whose enumeration index is congruent
    to k mod shard_count.
    """
    if n < 1:
        raise ValueError(f"tree order must be >= 1, got {n}")
    if n > max_order():
        raise BudgetExceededError(
            f"order {n} exceeds the generation budget {max_order()} (set MST_MAX_N to raise it)")
    if not (shard_count >= 1 and 0 <= shard_index < shard_count):
        raise ValueError("need 0 <= shard_index < shard_count")

    def emit():
        if n == 1:
            yield Tree(1, [])
            return
        # start at the path rooted at its center
        level = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
        while level is not None:
            level = _coerce_free(level)
            if level is None:
                return
            yield _level_to_tree(level)
            level = _successor(level)

    for index, tree in enumerate(emit()):
        if index % shard_count == shard_index:
            yield tree


# ---------------------------------------------------------------------------
# random labeled trees

def prufer_to_edges(seq, n: int):
    """Decode a Prüfer sequence over 0..n-1 (length n-2) into an edge list."""
    if n < 2:
        return []
    if len(seq) != n - 2:
        raise ValueError(f"Prüfer sequence for order {n} must have length {n - 2}")
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    edges = []
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for v in seq:
        edges.append((leaf, v))
        deg[v] -= 1
        if deg[v] == 1 and v < ptr:
            leaf = v
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return edges


def random_tree(n: int, seed: int) -> Tree:
    """Uniform random labeled tree, deterministic for fixed (n, seed)."""
    if n < 1:
        raise ValueError(f"tree order must be >= 1, got {n}")
    if n == 1:
        return Tree(1, [])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return Tree(n, prufer_to_edges(seq, n))


# ---------------------------------------------------------------------------
# brute-force oracle

def bruteforce_classes(n: int) -> frozenset:
    """Canonical codes of every isomorphism class of order n, from full
    Prüfer enumeration plus canonical-form dedup.

    Cost is n^(n-2) decodes; the budget is fixed at n <= 9.
    """
    if n < 1:
        raise ValueError(f"tree order must be >= 1, got {n}")
    if n > BRUTEFORCE_MAX_ORDER:
        raise BudgetExceededError(
            f"Prüfer enumeration is budgeted to order {BRUTEFORCE_MAX_ORDER}, got {n}")
    return frozenset(kernels.prufer_classes(n))
