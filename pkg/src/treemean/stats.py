"""Exact subtree statistics and means.

A rooted tree is summarized by the quadruple (n_v, r_v, n_t, r_t): the
number of subtrees containing the root, their total order, the number of
all subtrees, and their total order.  The quadruple is computed by a
post-order fold built from two O(1) steps (pendant-edge extension and
union at the root), so every value is an exact integer and the three means
are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List

from ._backend import stats_kernel
from .tree import Tree

__all__ = [
    "SubtreeStats",
    "extend_step",
    "union_step",
    "attach_path_stats",
    "subtree_stats",
    "all_root_quadruples",
    "global_mean",
    "local_mean",
    "mean_without_vertex",
    "MeanPropertyScan",
    "scan_mean_properties",
]


@dataclass(frozen=True)
class SubtreeStats:
    """Exact quadruple (n_v, r_v, n_t, r_t) of a rooted tree."""

    n_v: int
    r_v: int
    n_t: int
    r_t: int

    def __post_init__(self):
        ok = (1 <= self.n_v <= self.n_t
              and self.n_v <= self.r_v
              and self.n_t <= self.r_t
              and self.r_v <= self.r_t
              and self.r_v >= self.n_t)
        if not ok:
            raise ValueError(f"not a valid subtree-statistics quadruple: {self.as_tuple()}")

    def as_tuple(self):
        return (self.n_v, self.r_v, self.n_t, self.r_t)


def extend_step(s: SubtreeStats) -> SubtreeStats:
    """Statistics after hanging the old root below a new pendant root."""
    return SubtreeStats(
        n_v=s.n_v + 1,
        r_v=s.r_v + s.n_v + 1,
        n_t=s.n_t + s.n_v + 1,
        r_t=s.r_t + s.r_v + s.n_v + 1,
    )


def union_step(s1: SubtreeStats, s2: SubtreeStats) -> SubtreeStats:
    """Statistics after identifying the roots of two rooted trees."""
    n_v = s1.n_v * s2.n_v
    r_v = s1.n_v * s2.r_v + s2.n_v * s1.r_v - n_v
    return SubtreeStats(
        n_v=n_v,
        r_v=r_v,
        n_t=n_v + s1.n_t - s1.n_v + s2.n_t - s2.n_v,
        r_t=r_v + s1.r_t - s1.r_v + s2.r_t - s2.r_v,
    )


def attach_path_stats(s: SubtreeStats, l: int) -> SubtreeStats:
    """Statistics after appending a path of l new vertices at the root,
    re-rooted at the far end.  Closed form of l extension steps."""
    if l < 0:
        raise ValueError("path length must be non-negative")
    tri = l * (l + 1) // 2
    return SubtreeStats(
        n_v=s.n_v + l,
        r_v=s.r_v + l * s.n_v + tri,
        n_t=s.n_t + l * s.n_v + tri,
        r_t=s.r_t + l * s.r_v + tri * s.n_v + l * (l + 1) * (l + 2) // 6,
    )


def subtree_stats(t: Tree, root: int) -> SubtreeStats:
    """Exact quadruple for t rooted at `root`."""
    if not (0 <= root < t.n):
        raise ValueError(f"root {root} is not a vertex of the tree")
    quad = stats_kernel(t.n).root_stats(t.n, t.adjacency, root)
    return SubtreeStats(*quad)


def all_root_quadruples(t: Tree):
    """Raw (n_v, r_v, n_t, r_t) tuples for every root, indexed by vertex.

    Scan-friendly variant of subtree_stats: no dataclass wrapping.
    """
    return stats_kernel(t.n).all_root_stats(t.n, t.adjacency)


def global_mean(t: Tree) -> Fraction:
    """Average order over all subtrees of t."""
    _, _, n_t, r_t = stats_kernel(t.n).root_stats(t.n, t.adjacency, 0)
    return Fraction(r_t, n_t)


def local_mean(t: Tree, v: int) -> Fraction:
    """Average order over the subtrees of t containing v."""
    s = subtree_stats(t, v)
    return Fraction(s.r_v, s.n_v)


def mean_without_vertex(t: Tree, v: int) -> Fraction:
    """Average order over the subtrees of t avoiding v, computed from the
    quadruple (the forest t - v is never materialized)."""
    s = subtree_stats(t, v)
    if s.n_t == s.n_v:
        raise ValueError("every subtree of a singleton contains its vertex")
    return Fraction(s.r_t - s.r_v, s.n_t - s.n_v)


# ---------------------------------------------------------------------------
# corpus scan of the mean properties

@dataclass
class MeanPropertyScan:
    """Corpus check of the local/global mean relations, in rational form:
    the local mean strictly exceeds the global mean except on the
    singleton; the gap is at least (1/3)(n_t/n_v - 1); and the mean
    without the root is at most (n_v + 1)/3."""

    n_max: int
    trees: int = 0
    rooted_cases: int = 0
    violations: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def scan_mean_properties(n_max: int, shard_count: int = 1) -> MeanPropertyScan:
    from .generate import all_trees
    from .tree import canonical_string

    scan = MeanPropertyScan(n_max=n_max)
    records = []
    third = Fraction(1, 3)
    for n in range(1, n_max + 1):
        for shard in range(shard_count):
            for index, t in enumerate(all_trees(n, shard_index=shard,
                                                shard_count=shard_count)):
                tree_index = index * shard_count + shard if shard_count > 1 else index
                scan.trees += 1
                quads = all_root_quadruples(t)
                for v in range(n):
                    scan.rooted_cases += 1
                    nv, rv, nt, rt = quads[v]
                    local = Fraction(rv, nv)
                    glob = Fraction(rt, nt)
                    problems = []
                    if n == 1:
                        if local != glob:
                            problems.append("singleton-means-differ")
                    elif local <= glob:
                        problems.append("local-not-strictly-above-global")
                    if local - glob < third * (Fraction(nt, nv) - 1):
                        problems.append("local-global-gap-below-bound")
                    if nt > nv and Fraction(rt - rv, nt - nv) > Fraction(nv + 1, 3):
                        problems.append("mean-without-vertex-above-bound")
                    for problem in problems:
                        records.append({
                            "n": n,
                            "index": tree_index,
                            "root": v,
                            "check": problem,
                            "margin": None,
                            "tree": canonical_string(t),
                        })
    records.sort(key=lambda r: (r["n"], r["index"], r["root"], r["check"]))
    scan.violations = records
    return scan
