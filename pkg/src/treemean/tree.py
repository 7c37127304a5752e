"""Labeled free trees: data model, edge contraction, edge classification,
internal-path decomposition, rooted composition, and named families.

Vertices are always the contiguous ids 0..n-1 and a tree of order n has
exactly n-1 edges.  All operations are pure: trees are never mutated, and
every constructor re-validates the structural invariants.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from ._backend import code_kernel
from .errors import TreeError, TreeFormatError

__all__ = [
    "Tree",
    "RootedTree",
    "EdgeClass",
    "InternalPathDecomposition",
    "parse_tree",
    "format_tree",
    "contract_edge",
    "classify_edge",
    "internal_path_of",
    "union_at_root",
    "attach_path",
    "make_family",
    "FAMILY_NAMES",
    "rooted_code",
    "canonical_code",
    "canonical_string",
    "trees_isomorphic",
]


class EdgeClass(enum.Enum):
    ON_PENDANT_PATH = "on-pendant-path"
    INTERNAL = "internal"


def _validate(n, edges):
    if n < 1:
        raise TreeError(f"tree order must be >= 1, got {n}", reason="order")
    if len(edges) != n - 1:
        raise TreeError(
            f"a tree of order {n} needs exactly {n - 1} edges, got {len(edges)}",
            reason="edge-count",
        )
    seen = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise TreeError(f"edge ({u}, {v}) uses a vertex id outside 0..{n - 1}",
                            reason="vertex-id")
        if u == v:
            raise TreeError(f"self-loop at vertex {u}", reason="self-loop")
        if (u, v) in seen:
            raise TreeError(f"duplicate edge ({u}, {v})", reason="duplicate-edge")
        seen.add((u, v))
    # with exactly n-1 distinct edges, connected also means acyclic
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    reached = [False] * n
    reached[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not reached[w]:
                reached[w] = True
                count += 1
                stack.append(w)
    if count != n:
        raise TreeError("edge list does not connect all vertices (disconnected or cyclic)",
                        reason="disconnected")


class Tree:
    """Immutable labeled tree backed by an edge list.

    Edges are normalized to (min, max) pairs; their order is preserved from
    construction so that emitted files are reproducible.
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges):
        edges = tuple((u, v) if u <= v else (v, u) for u, v in edges)
        _validate(n, edges)
        self.n = n
        self.edges = edges
        self._adj = None

    @property
    def adjacency(self):
        if self._adj is None:
            lists = [[] for _ in range(self.n)]
            for u, v in self.edges:
                lists[u].append(v)
                lists[v].append(u)
            self._adj = tuple(tuple(x) for x in lists)
        return self._adj

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_path(self) -> bool:
        return all(len(a) <= 2 for a in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        e = (u, v) if u <= v else (v, u)
        return e in self.edges

    def __eq__(self, other):
        return isinstance(other, Tree) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Tree(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class RootedTree:
    """A tree together with a distinguished root vertex."""

    tree: Tree
    root: int

    def __post_init__(self):
        if not (0 <= self.root < self.tree.n):
            raise TreeError(f"root {self.root} is not a vertex of the tree",
                            reason="vertex-id")

    @property
    def n(self) -> int:
        return self.tree.n

    def root_degree(self) -> int:
        return self.tree.degree(self.root)


@dataclass(frozen=True)
class InternalPathDecomposition:
    """Maximal internal path around an internal edge.

    The path from v1 to v2 has l+1 vertices (so l-1 interior vertices, all
    of degree 2 in the original tree); side1/side2 are the components
    hanging off v1/v2 away from the path, re-labeled and rooted at the
    images of v1/v2.
    """

    v1: int
    v2: int
    l: int
    side1: RootedTree
    side2: RootedTree


# ---------------------------------------------------------------------------
# text format

def parse_tree(text: str) -> Tree:
    """Parse the tree file format: first line n, then n-1 lines "u v".

    Lines starting with '#' and blank lines are ignored.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        rows.append((lineno, s))
    if not rows:
        raise TreeFormatError("no content lines in tree file", reason="syntax")
    lineno, head = rows[0]
    try:
        n = int(head)
    except ValueError:
        raise TreeFormatError(f"line {lineno}: expected the vertex count, got {head!r}",
                              reason="syntax") from None
    edges = []
    for lineno, s in rows[1:]:
        fields = s.split()
        if len(fields) != 2:
            raise TreeFormatError(f"line {lineno}: expected 'u v', got {s!r}",
                                  reason="syntax")
        try:
            edges.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise TreeFormatError(f"line {lineno}: vertex ids must be integers, got {s!r}",
                                  reason="syntax") from None
    try:
        return Tree(n, edges)
    except TreeFormatError:
        raise
    except TreeError as exc:
        raise TreeFormatError(str(exc), reason=exc.reason) from None


def format_tree(t: Tree) -> str:
    lines = [str(t.n)]
    lines.extend(f"{u} {v}" for u, v in t.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# contraction and edge classification

def _as_edge(t: Tree, e) -> tuple[int, int]:
    u, v = e
    e = (u, v) if u <= v else (v, u)
    if e not in t.edges:
        raise TreeError(f"({u}, {v}) is not an edge of the tree", reason="edge")
    return e


def contract_edge(t: Tree, e) -> Tree:
    """Identify the endpoints of e and re-compact ids to 0..n-2.

    Vertex ids above the dropped endpoint shift down by one; no stable-id
    guarantee is made beyond that.
    """
    u, v = _as_edge(t, e)
    out = []
    for a, b in t.edges:
        if (a, b) == (u, v):
            continue
        a2 = u if a == v else a
        b2 = u if b == v else b
        out.append((a2 - (a2 > v), b2 - (b2 > v)))
    return Tree(t.n - 1, out)


def _side_is_pendant_path(t: Tree, tail: int, head: int) -> bool:
    """Is the component of t - (tail, head) containing `tail` a path with
    `tail` as one of its ends?

    Removing only that edge leaves internal degrees unchanged except at
    `tail`, so the test reduces to degree bounds: deg(tail) <= 2 and every
    other vertex of the component has degree <= 2.
    """
    if t.degree(tail) > 2:
        return False
    adj = t.adjacency
    seen = {tail, head}
    stack = [w for w in adj[tail] if w != head]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        if t.degree(v) > 2:
            return False
        stack.extend(w for w in adj[v] if w not in seen)
    return True


def classify_edge(t: Tree, e) -> EdgeClass:
    """On-pendant-path iff at least one side of e is a path ending at the
    incident endpoint (a singleton side counts); internal otherwise."""
    u, v = _as_edge(t, e)
    if _side_is_pendant_path(t, u, v) or _side_is_pendant_path(t, v, u):
        return EdgeClass.ON_PENDANT_PATH
    return EdgeClass.INTERNAL


def _walk_to_hub(t: Tree, start: int, away_from: int):
    """Follow degree-2 vertices from `start` (not towards `away_from`)
    until a vertex of degree >= 3; returns the chain [start, ..., hub]."""
    adj = t.adjacency
    chain = [start]
    prev, cur = away_from, start
    while t.degree(cur) == 2:
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        prev, cur = cur, nxt
        chain.append(cur)
    return chain


def _component(t: Tree, keep: int, cut: int):
    """Vertices of the component of t - (keep, cut) containing `keep`."""
    adj = t.adjacency
    seen = {keep, cut}
    out = [keep]
    stack = [w for w in adj[keep] if w != cut]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        out.append(v)
        stack.extend(adj[v])
    return sorted(out)


def _extract_rooted(t: Tree, vertices, root: int) -> RootedTree:
    index = {v: i for i, v in enumerate(vertices)}
    vset = set(vertices)
    edges = [(index[a], index[b]) for a, b in t.edges if a in vset and b in vset]
    return RootedTree(Tree(len(vertices), edges), index[root])


def internal_path_of(t: Tree, e) -> InternalPathDecomposition:
    """Maximal internal path containing the internal edge e.

    Contracting any edge of an internal path yields the same result, so the
    decomposition is normalized: it depends only on the path, with v1 the
    smaller-id end vertex.
    """
    u, v = _as_edge(t, e)
    if classify_edge(t, e) is not EdgeClass.INTERNAL:
        raise TreeError(f"edge ({u}, {v}) lies on a pendant path", reason="classification")
    left = _walk_to_hub(t, u, v)
    right = _walk_to_hub(t, v, u)
    path = list(reversed(left)) + right
    v1, v2 = path[0], path[-1]
    if v1 > v2:
        v1, v2 = v2, v1
        path.reverse()
    l = len(path) - 1
    side1 = _extract_rooted(t, _component(t, v1, path[1]), v1)
    side2 = _extract_rooted(t, _component(t, v2, path[-2]), v2)
    return InternalPathDecomposition(v1=v1, v2=v2, l=l, side1=side1, side2=side2)


# ---------------------------------------------------------------------------
# rooted composition

def union_at_root(a: RootedTree, b: RootedTree) -> RootedTree:
    """Identify the two roots; the result is rooted at the merged vertex.

    Vertices of `a` keep their ids; the non-root vertices of `b` follow in
    id order.
    """
    ta, tb = a.tree, b.tree
    mapping = {}
    nxt = ta.n
    for v in range(tb.n):
        if v == b.root:
            mapping[v] = a.root
        else:
            mapping[v] = nxt
            nxt += 1
    edges = list(ta.edges) + [(mapping[x], mapping[y]) for x, y in tb.edges]
    return RootedTree(Tree(ta.n + tb.n - 1, edges), a.root)


def attach_path(a: RootedTree, l: int) -> RootedTree:
    """Append a path of l new vertices at the root; the far end becomes the
    new root.  l = 0 returns `a` unchanged."""
    if l < 0:
        raise ValueError("path length must be non-negative")
    if l == 0:
        return a
    t = a.tree
    edges = list(t.edges)
    prev = a.root
    for i in range(l):
        edges.append((prev, t.n + i))
        prev = t.n + i
    return RootedTree(Tree(t.n + l, edges), prev)


# ---------------------------------------------------------------------------
# named families

FAMILY_NAMES = (
    "path",
    "star",
    "p22",
    "p23",
    "double_star",
    "dumbbell",
    "path_with_center_leaf",
)


def _path_tree(n):
    return Tree(n, [(i, i + 1) for i in range(n - 1)])


def make_family(name: str, *args: int):
    """Construct a named tree family member.

    path(n), star(k), double_star(a, b), dumbbell(a, b, l) and
    path_with_center_leaf(n) return a Tree; p22 and p23 return a
    RootedTree.  dumbbell joins two star centers by a path with l+1
    vertices on it end to end; path_with_center_leaf(n) is a path of n-1
    vertices plus a pendant vertex at its center (lower middle for even
    length).
    """
    def need(k):
        if len(args) != k:
            raise ValueError(f"family {name!r} takes {k} parameter(s), got {len(args)}")

    if name == "path":
        need(1)
        (n,) = args
        if n < 1:
            raise ValueError("path(n) needs n >= 1")
        return _path_tree(n)
    if name == "star":
        need(1)
        (k,) = args
        if k < 1:
            raise ValueError("star(k) needs k >= 1 leaves")
        return Tree(k + 1, [(0, i) for i in range(1, k + 1)])
    if name == "p22":
        need(0)
        return RootedTree(Tree(3, [(0, 1), (0, 2)]), 0)
    if name == "p23":
        need(0)
        return RootedTree(Tree(4, [(0, 1), (0, 2), (2, 3)]), 0)
    if name == "double_star":
        need(2)
        a, b = args
        if a < 1 or b < 1:
            raise ValueError("double_star(a, b) needs a, b >= 1")
        edges = [(0, 1)]
        edges += [(0, 2 + i) for i in range(a)]
        edges += [(1, 2 + a + i) for i in range(b)]
        return Tree(2 + a + b, edges)
    if name == "dumbbell":
        need(3)
        a, b, l = args
        if a < 1 or b < 1 or l < 1:
            raise ValueError("dumbbell(a, b, l) needs a, b >= 1 and l >= 1")
        # path of l+1 vertices 0..l, star leaves attached at both ends
        edges = [(i, i + 1) for i in range(l)]
        edges += [(0, l + 1 + i) for i in range(a)]
        edges += [(l, l + 1 + a + i) for i in range(b)]
        return Tree(l + 1 + a + b, edges)
    if name == "path_with_center_leaf":
        need(1)
        (n,) = args
        if n < 2:
            raise ValueError("path_with_center_leaf(n) needs n >= 2")
        m = n - 1
        edges = [(i, i + 1) for i in range(m - 1)]
        edges.append(((m - 1) // 2, m))
        return Tree(n, edges)
    raise ValueError(f"unknown family {name!r}; known: {', '.join(FAMILY_NAMES)}")


# ---------------------------------------------------------------------------
# canonical forms

def rooted_code(t: Tree, root: int) -> bytes:
    """Canonical encoding of (t, root); equal iff rooted-isomorphic."""
    if not (0 <= root < t.n):
        raise TreeError(f"root {root} is not a vertex of the tree", reason="vertex-id")
    return code_kernel(t.n).rooted_code(t.n, t.adjacency, root)


def canonical_code(t: Tree) -> bytes:
    """Canonical encoding of the free tree; equal iff isomorphic."""
    return code_kernel(t.n).free_code(t.n, t.adjacency)


def trees_isomorphic(t1: Tree, t2: Tree) -> bool:
    return t1.n == t2.n and canonical_code(t1) == canonical_code(t2)


def _centers(t: Tree):
    adj = t.adjacency
    if t.n == 1:
        return [0]
    deg = [len(a) for a in adj]
    layer = [v for v in range(t.n) if deg[v] == 1]
    removed = 0
    while removed + len(layer) < t.n:
        removed += len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return layer


def canonical_string(t: Tree) -> str:
    """Canonical relabeling of t in the tree file format with ';' between
    lines.  Isomorphic trees map to the same string."""
    adj = t.adjacency
    root = min(_centers(t), key=lambda c: rooted_code(t, c))

    parent = [-2] * t.n
    parent[root] = -1
    order = [root]
    for v in order:
        for w in adj[v]:
            if parent[w] == -2:
                parent[w] = v
                order.append(w)
    code = [b""] * t.n
    for v in reversed(order):
        children = sorted(code[w] for w in adj[v] if parent[w] == v)
        code[v] = b"(" + b"".join(children) + b")"

    # ids assigned in DFS discovery order, children taken in code order;
    # equal-coded siblings are interchangeable, so the string is invariant
    new_id = {root: 0}
    edges = []
    stack = [root]
    while stack:
        v = stack.pop()
        kids = sorted((w for w in adj[v] if parent[w] == v), key=lambda w: code[w])
        for w in kids:
            new_id[w] = len(new_id)
            edges.append((new_id[v], new_id[w]))
        stack.extend(reversed(kids))
    return ";".join([str(t.n)] + [f"{u} {v}" for u, v in edges])
