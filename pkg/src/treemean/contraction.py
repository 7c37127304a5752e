"""Edge-contraction analysis: exact mean differences, the coefficient
algebra of the internal-path family, and verification scans.

For two rooted sides joined by a path with l+1 vertices end to end, the
global mean is the rational function

    mu(l) = (l^3/6 + (N1+N2)/2 l^2 + A l + B) / (l^2/2 + D l + C)

with A, B, C computed from the sides' quadruples and D = N1 + N2 - 1/2.
The drop when one path edge is contracted exceeds 1/3 by exactly

    d(l) - 1/3 = ([I] l(l-1) + [II] (2l-1) + [III]) / (3 Q(l) Q(l-1)),

where Q is the mu denominator and [I], [II], [III] are the three part
values; the identity is exercised exactly by the test suite.  Positivity
of the three parts is what the verification campaigns check on generated
corpora.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .errors import TreeError
from .generate import all_trees
from .stats import SubtreeStats, global_mean, subtree_stats
from .tree import (
    EdgeClass,
    RootedTree,
    Tree,
    attach_path,
    canonical_string,
    classify_edge,
    contract_edge,
    make_family,
    union_at_root,
)

__all__ = [
    "ONE_THIRD",
    "Coefficients",
    "Parts",
    "ContractionReport",
    "coefficients",
    "mu_l",
    "parts",
    "d_excess",
    "contraction_difference",
    "assemble",
    "TheoremScan",
    "verify_theorem",
    "ExtremalResult",
    "extremal_scan",
    "asymptotic_scan",
]

ONE_THIRD = Fraction(1, 3)


@dataclass(frozen=True)
class Coefficients:
    """Coefficient algebra of a two-sided internal path.

    a, b, c are the mu(l) coefficients (b and c are integers: the total
    order and count of subtrees of the l=0 union tree, so mu(0) = b/c);
    d = n1 + n2 - 1/2 shows up in the denominator; n1, n2 are the sides'
    root subtree counts, carried along for the part formulas.
    """

    a: Fraction
    b: int
    c: int
    d: Fraction
    n1: int
    n2: int


@dataclass(frozen=True)
class Parts:
    """The three part values whose positivity bounds d(l) - 1/3 above 0."""

    part_i: Fraction
    part_ii: Fraction
    part_iii: Fraction


def coefficients(s1: SubtreeStats, s2: SubtreeStats) -> Coefficients:
    """Coefficients for sides with quadruples s1 (at v1) and s2 (at v2)."""
    n1, r1, nl, rl = s1.as_tuple()
    n2, r2, nr, rr = s2.as_tuple()
    a = Fraction(6 * (r1 + r2 + n1 * n2) - 3 * n1 - 3 * n2 - 1, 6)
    b = n1 * r2 + n2 * r1 - n1 * n2 + rl + rr - r1 - r2
    c = n1 * n2 + nl + nr - n1 - n2
    d = Fraction(2 * (n1 + n2) - 1, 2)
    return Coefficients(a=a, b=b, c=c, d=d, n1=n1, n2=n2)


def _q(cf: Coefficients, l: int) -> Fraction:
    return Fraction(l * l, 2) + cf.d * l + cf.c


def mu_l(cf: Coefficients, l: int) -> Fraction:
    """Global mean of the two-sided tree whose connecting path has l+1
    vertices end to end (l = 0 identifies the two roots)."""
    if l < 0:
        raise ValueError("path parameter must be non-negative")
    s = cf.n1 + cf.n2
    num = Fraction(l ** 3, 6) + Fraction(s * l * l, 2) + cf.a * l + cf.b
    return num / _q(cf, l)


def parts(cf: Coefficients) -> Parts:
    s = cf.n1 + cf.n2
    half_c = Fraction(cf.c, 2)
    part_i = half_c - Fraction(3, 2) * cf.a + Fraction(1, 2) * (s + 1) * (s - Fraction(1, 2))
    part_ii = half_c * (s + 1) - Fraction(3 * cf.b, 2)
    part_iii = 3 * cf.a * cf.c - 3 * cf.b * (s - Fraction(1, 2)) - cf.c * cf.c
    return Parts(part_i=part_i, part_ii=part_ii, part_iii=part_iii)


def d_excess(cf: Coefficients, l: int) -> Fraction:
    """Exact value of d(l) - 1/3 = mu(l) - mu(l-1) - 1/3 for l >= 1.

    Evaluated through the closed quotient (numerator quadratic in l,
    denominator quartic), not through mu_l, so the two computation paths
    are independent.
    """
    if l < 1:
        raise ValueError("the contraction difference needs l >= 1")
    p = parts(cf)
    num = p.part_i * l * (l - 1) + p.part_ii * (2 * l - 1) + p.part_iii
    return num / (3 * _q(cf, l) * _q(cf, l - 1))


# ---------------------------------------------------------------------------
# direct contraction of concrete trees

@dataclass(frozen=True)
class ContractionReport:
    """Exact drop of the global mean when one edge is contracted."""

    edge: Tuple[int, int]
    edge_class: EdgeClass
    difference: Fraction
    excess: Fraction  # difference - 1/3


def contraction_difference(t: Tree, e) -> ContractionReport:
    """mu_T - mu_T* for the contraction of e, with the edge classified."""
    u, v = e
    edge = (u, v) if u <= v else (v, u)
    cls = classify_edge(t, edge)
    diff = global_mean(t) - global_mean(contract_edge(t, edge))
    return ContractionReport(edge=edge, edge_class=cls, difference=diff,
                             excess=diff - ONE_THIRD)


def assemble(side1: RootedTree, side2: RootedTree, l: int) -> Tree:
    """The concrete tree whose mean mu_l predicts: the two roots joined by
    a path with l+1 vertices end to end (l = 0 identifies the roots)."""
    if l < 0:
        raise ValueError("path parameter must be non-negative")
    return union_at_root(attach_path(side1, l), side2).tree


# ---------------------------------------------------------------------------
# theorem-scale verification

@dataclass
class TheoremScan:
    """Outcome of checking mu_T - mu_T* >= 1/3 over a whole corpus."""

    n_max: int
    trees: int = 0
    edges_checked: int = 0
    equality_edges: int = 0
    violations: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def verify_theorem(n_max: int, shard_count: int = 1) -> TheoremScan:
    """Contract every edge of every tree of order <= n_max and check:
    the drop is at least 1/3; it equals 1/3 exactly when the tree is a
    path; and it is strictly larger on internal edges.

    Every edge is contracted directly (statistics on T and T*); mu_l is
    validated separately, so the two routes stay independent.
    """
    scan = TheoremScan(n_max=n_max)
    records = []
    for n in range(1, n_max + 1):
        for shard in range(shard_count):
            for index, t in enumerate(all_trees(n, shard_index=shard,
                                                shard_count=shard_count)):
                tree_index = index * shard_count + shard if shard_count > 1 else index
                scan.trees += 1
                if n == 1:
                    continue
                mu_t = global_mean(t)
                is_path = t.is_path()
                for edge in t.edges:
                    scan.edges_checked += 1
                    diff = mu_t - global_mean(contract_edge(t, edge))
                    problem = None
                    if diff < ONE_THIRD:
                        problem = "drop-below-one-third"
                    elif diff == ONE_THIRD:
                        scan.equality_edges += 1
                        if not is_path:
                            problem = "equality-off-path"
                        elif classify_edge(t, edge) is EdgeClass.INTERNAL:
                            problem = "internal-edge-not-strict"
                    elif is_path:
                        problem = "path-edge-not-exact"
                    if problem:
                        records.append({
                            "n": n,
                            "index": tree_index,
                            "edge": list(edge),
                            "check": problem,
                            "difference": diff,
                            "tree": canonical_string(t),
                        })
    records.sort(key=lambda r: (r["n"], r["index"], r["edge"]))
    scan.violations = records
    return scan


# ---------------------------------------------------------------------------
# extremal and asymptotic scans

@dataclass(frozen=True)
class ExtremalResult:
    tree: Tree
    edge: Tuple[int, int]
    difference: Fraction

    @property
    def ratio(self) -> Fraction:
        """difference / |T|; roughly 1/18 for the pendant-at-path-center
        family as the order grows."""
        return self.difference / self.tree.n


def extremal_scan(n: int, mode: str = "family") -> ExtremalResult:
    """Largest contraction difference at order n.

    "family" evaluates the path-with-a-center-leaf tree at its pendant
    edge (no generation budget); "exhaustive" takes the argmax over every
    edge of every tree of order n.
    """
    if mode == "family":
        t = make_family("path_with_center_leaf", n)
        pendant = next(e for e in t.edges if t.n - 1 in e)
        report = contraction_difference(t, pendant)
        return ExtremalResult(tree=t, edge=report.edge, difference=report.difference)
    if mode == "exhaustive":
        best = None
        for t in all_trees(n):
            mu_t = global_mean(t)
            for edge in t.edges:
                diff = mu_t - global_mean(contract_edge(t, edge))
                if best is None or diff > best.difference:
                    best = ExtremalResult(tree=t, edge=edge, difference=diff)
        if best is None:
            raise ValueError("no edges at this order")
        return best
    raise ValueError(f"unknown mode {mode!r}")


def _side_coefficients(side1: RootedTree, side2: RootedTree) -> Coefficients:
    for side in (side1, side2):
        if side.root_degree() < 2:
            raise TreeError("side roots must have degree >= 2 for the "
                            "internal-path coefficient algebra", reason="root-degree")
    s1 = subtree_stats(side1.tree, side1.root)
    s2 = subtree_stats(side2.tree, side2.root)
    return coefficients(s1, s2)


def asymptotic_scan(side1: RootedTree, side2: RootedTree,
                    l_values: Sequence[int]) -> List[Tuple[int, Fraction]]:
    """Exact excess d(l) - 1/3 at each requested path parameter.

    l_values must be positive and strictly ascending.  The excess decays
    like 1/l^2, so the series converges to 0 and l^2 * excess stays
    bounded; the scans in the test suite assert both.
    """
    ls = list(l_values)
    if not ls or any(l < 1 for l in ls) or any(b <= a for a, b in zip(ls, ls[1:])):
        raise ValueError("l values must be positive and strictly ascending")
    cf = _side_coefficients(side1, side2)
    return [(l, d_excess(cf, l)) for l in ls]
