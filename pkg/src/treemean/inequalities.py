"""Integer-margin forms of the eight auxiliary subtree-count inequalities,
and exhaustive corpus scans locating every violation.

Each inequality is stored as an integer normal form LHS - RHS, so checks
are exact integer comparisons.  Six of the eight hold for every rooted
tree; the two root-degree-2 inequalities (2.5 and 2.6) have a fixed
exclusion list of two small rooted trees, and the scan labels those
instead of skipping them so that "exactly these fail" is testable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, List, Optional

from . import stats
from .generate import all_trees
from .tree import Tree, canonical_string, make_family, rooted_code

__all__ = [
    "InequalityId",
    "Margin",
    "margin",
    "margin_value",
    "UNIVERSAL_IDS",
    "ROOT_DEG2_IDS",
    "exceptional_rooted_codes",
    "expected_violations",
    "InequalityScan",
    "scan_corpus",
]


class InequalityId(enum.Enum):
    """The eight inequalities, in their conventional numbering."""

    JAMISON21 = "2.1"      # N_v^2 + N_v >= 2 R_v
    STEPHAN22 = "2.2"      # N_v^2 + N_v + N_T >= 3 R_v
    RV_GE_NT23 = "2.3"     # R_v >= N_T
    NN2N24 = "2.4"         # N_v N_T + 2 N_T >= 3 R_T
    NSQ_N3R25 = "2.5"      # N_v^2 + N_v >= 3 R_v        (root degree >= 2)
    NNN3R26 = "2.6"        # N_v N_T + N_T > 3 R_T       (root degree >= 2)
    CROSS_MUL27 = "2.7"    # 3(N_T R_v - N_v R_T) >= N_T^2 - N_v N_T
    COMPLEMENT28 = "2.8"   # N_v N_T - N_v^2 + N_T - N_v >= 3(R_T - R_v)


def _m21(nv, rv, nt, rt):
    return nv * nv + nv - 2 * rv


def _m22(nv, rv, nt, rt):
    return nv * nv + nv + nt - 3 * rv


def _m23(nv, rv, nt, rt):
    return rv - nt


def _m24(nv, rv, nt, rt):
    return nv * nt + 2 * nt - 3 * rt


def _m25(nv, rv, nt, rt):
    return nv * nv + nv - 3 * rv


def _m26(nv, rv, nt, rt):
    return nv * nt + nt - 3 * rt


def _m27(nv, rv, nt, rt):
    return 3 * (nt * rv - nv * rt) - (nt * nt - nv * nt)


def _m28(nv, rv, nt, rt):
    return nv * nt - nv * nv + nt - nv - 3 * (rt - rv)


_FORMULAS = {
    InequalityId.JAMISON21: _m21,
    InequalityId.STEPHAN22: _m22,
    InequalityId.RV_GE_NT23: _m23,
    InequalityId.NN2N24: _m24,
    InequalityId.NSQ_N3R25: _m25,
    InequalityId.NNN3R26: _m26,
    InequalityId.CROSS_MUL27: _m27,
    InequalityId.COMPLEMENT28: _m28,
}

# 2.6 demands a strictly positive margin; all others allow equality
STRICT_IDS = frozenset({InequalityId.NNN3R26})

# 2.5 and 2.6 are stated for roots of degree >= 2 with two excluded trees
ROOT_DEG2_IDS = (InequalityId.NSQ_N3R25, InequalityId.NNN3R26)
UNIVERSAL_IDS = tuple(i for i in InequalityId if i not in ROOT_DEG2_IDS)


@dataclass(frozen=True)
class Margin:
    """Exact integer margin LHS - RHS plus the required relation."""

    value: int
    strict: bool

    @property
    def satisfied(self) -> bool:
        return self.value > 0 if self.strict else self.value >= 0


def margin_value(id: InequalityId, quad) -> int:
    nv, rv, nt, rt = quad
    return _FORMULAS[id](nv, rv, nt, rt)


def margin(id: InequalityId, s: stats.SubtreeStats) -> Margin:
    """Exact margin of inequality `id` at the quadruple `s`."""
    return Margin(value=margin_value(id, s.as_tuple()), strict=id in STRICT_IDS)


# ---------------------------------------------------------------------------
# exclusion list for 2.5 / 2.6

def _exceptional():
    out = {}
    for name in ("p22", "p23"):
        rt = make_family(name)
        out[name] = rooted_code(rt.tree, rt.root)
    return out


_EXCEPTIONAL_CODES = _exceptional()
_EXCEPTIONAL_ORDER = {"p22": 3, "p23": 4}


def exceptional_rooted_codes():
    """Rooted canonical codes of the two excluded rooted trees."""
    return dict(_EXCEPTIONAL_CODES)


def expected_violations(n_max: int, ids: Iterable[InequalityId]):
    """The (id, excluded-tree-name) pairs that must show up as violations
    in a scan up to n_max: exactly the excluded rooted trees whose
    quadruples actually fail the required relation."""
    quads = {}
    for name in ("p22", "p23"):
        rt = make_family(name)
        quads[name] = stats.subtree_stats(rt.tree, rt.root)
    out = set()
    for id in ids:
        if id not in ROOT_DEG2_IDS:
            continue
        for name, quad in quads.items():
            if _EXCEPTIONAL_ORDER[name] <= n_max and not margin(id, quad).satisfied:
                out.add((id, name))
    return out


# ---------------------------------------------------------------------------
# corpus scan

@dataclass
class InequalityScan:
    """Result of an exhaustive margin scan over a generated corpus."""

    n_max: int
    scope: str
    ids: tuple
    trees: int = 0
    rooted_cases: int = 0
    violations: List[dict] = field(default_factory=list)
    min_regular_root_count: Optional[int] = None

    @property
    def passed(self) -> bool:
        unexpected = [v for v in self.violations if not v["excluded"]]
        if unexpected:
            return False
        observed = {(InequalityId(v["check"]), v["excluded"]) for v in self.violations}
        return observed == expected_violations(self.n_max, self.ids)


def scan_corpus(n_max: int, ids: Optional[Iterable[InequalityId]] = None,
                scope: str = "all-roots", shard_count: int = 1) -> InequalityScan:
    """Scan every tree of order <= n_max at every root in scope and record
    all margins that fail their required relation.

    scope "all-roots" checks every vertex; "deg-ge-2-roots" restricts to
    roots of degree >= 2 (the stated scope of 2.5 and 2.6).  Violations at
    one of the two excluded rooted trees carry its name in `excluded`.
    The scan also records the minimum root count n_v seen over degree->=2
    non-excluded roots, as evidence for the N_v > 6 side remark.
    """
    if scope not in ("all-roots", "deg-ge-2-roots"):
        raise ValueError(f"unknown scope {scope!r}")
    ids = tuple(ids) if ids is not None else tuple(InequalityId)
    scan = InequalityScan(n_max=n_max, scope=scope, ids=ids)
    records = []
    for n in range(1, n_max + 1):
        for shard in range(shard_count):
            for index, t in enumerate(all_trees(n, shard_index=shard,
                                                shard_count=shard_count)):
                tree_index = index * shard_count + shard if shard_count > 1 else index
                scan.trees += 1
                quads = stats.all_root_quadruples(t)
                for root in range(n):
                    if scope == "deg-ge-2-roots" and t.degree(root) < 2:
                        continue
                    scan.rooted_cases += 1
                    quad = quads[root]
                    excluded = None
                    if t.degree(root) >= 2:
                        code = rooted_code(t, root)
                        for name, xcode in _EXCEPTIONAL_CODES.items():
                            if code == xcode:
                                excluded = name
                        if excluded is None:
                            nv = quad[0]
                            if (scan.min_regular_root_count is None
                                    or nv < scan.min_regular_root_count):
                                scan.min_regular_root_count = nv
                    for id in ids:
                        m = Margin(value=margin_value(id, quad),
                                   strict=id in STRICT_IDS)
                        if not m.satisfied:
                            records.append({
                                "n": n,
                                "index": tree_index,
                                "root": root,
                                "check": id.value,
                                "margin": m.value,
                                "excluded": excluded,
                                "tree": canonical_string(t),
                            })
    records.sort(key=lambda r: (r["n"], r["index"], r["root"], r["check"]))
    scan.violations = records
    return scan
