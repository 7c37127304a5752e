"""Pure-Python kernels.

These are the reference implementations of the hot inner loops; the
compiled twins in ``_kernels_c`` expose the same functions with identical
results.  Everything here runs on plain Python integers, so results are
exact at any order.  Adjacency is passed as a sequence of per-vertex
neighbor sequences for vertices 0..n-1.
"""

from itertools import product

__all__ = [
    "root_stats",
    "all_root_stats",
    "rooted_code",
    "free_code",
    "prufer_classes",
]


def _search_order(n, adj, root):
    """BFS order and parent array; iterative, safe for very deep trees."""
    parent = [-2] * n
    parent[root] = -1
    order = [root]
    for v in order:
        for w in adj[v]:
            if parent[w] == -2:
                parent[w] = v
                order.append(w)
    return order, parent


def root_stats(n, adj, root):
    """Exact (n_v, r_v, n_t, r_t) for the tree rooted at `root`.

    Post-order fold: a leaf contributes (1, 1, 1, 1); each child subtree is
    first extended through its parent edge and then merged into the running
    union at the parent.
    """
    order, parent = _search_order(n, adj, root)
    stats = [None] * n
    for v in reversed(order):
        nv, rv, nt, rt = 1, 1, 1, 1
        for w in adj[v]:
            if w != parent[v]:
                cn, cr, cnt, crt = stats[w]
                # extend child stats through the edge (v, w)
                en = cn + 1
                er = cr + cn + 1
                ent = cnt + cn + 1
                ert = crt + cr + cn + 1
                # union with the accumulator at v
                un = nv * en
                ur = nv * er + en * rv - nv * en
                unt = un + nt - nv + ent - en
                urt = ur + rt - rv + ert - er
                nv, rv, nt, rt = un, ur, unt, urt
        stats[v] = (nv, rv, nt, rt)
    return stats[root]


def all_root_stats(n, adj):
    """Quadruples for every root, indexed by vertex id."""
    return [root_stats(n, adj, v) for v in range(n)]


def rooted_code(n, adj, root):
    """Canonical encoding of a rooted tree: sorted child codes in parens."""
    order, parent = _search_order(n, adj, root)
    code = [b""] * n
    for v in reversed(order):
        children = sorted(code[w] for w in adj[v] if w != parent[v])
        code[v] = b"(" + b"".join(children) + b")"
    return code[root]


def _centers(n, adj):
    if n == 1:
        return [0]
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    removed = 0
    while removed + len(layer) < n:
        removed += len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return layer


def free_code(n, adj):
    """Canonical encoding of a free tree: minimum center-rooted code."""
    return min(rooted_code(n, adj, c) for c in _centers(n, adj))


def _decode_prufer(seq, n, deg, nbr_flat, nbr_len):
    """Decode one Prüfer sequence into adjacency scratch arrays."""
    for v in range(n):
        deg[v] = 1
        nbr_len[v] = 0
    for x in seq:
        deg[x] += 1
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for v in seq:
        nbr_flat[leaf * n + nbr_len[leaf]] = v
        nbr_len[leaf] += 1
        nbr_flat[v * n + nbr_len[v]] = leaf
        nbr_len[v] += 1
        deg[v] -= 1
        if deg[v] == 1 and v < ptr:
            leaf = v
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    nbr_flat[leaf * n + nbr_len[leaf]] = n - 1
    nbr_len[leaf] += 1
    nbr_flat[(n - 1) * n + nbr_len[n - 1]] = leaf
    nbr_len[n - 1] += 1


def prufer_classes(n):
    """Canonical codes of all isomorphism classes of trees of order n,
    found by decoding every one of the n^(n-2) Prüfer sequences.

    Exhaustive by construction; the cost grows like n^(n-2), so callers
    enforce a budget before calling.
    """
    if n == 1:
        return {b"()"}
    if n == 2:
        return {free_code(2, ((1,), (0,)))}
    classes = set()
    deg = [0] * n
    nbr_flat = [0] * (n * n)
    nbr_len = [0] * n
    for seq in product(range(n), repeat=n - 2):
        _decode_prufer(seq, n, deg, nbr_flat, nbr_len)
        adj = [nbr_flat[v * n : v * n + nbr_len[v]] for v in range(n)]
        classes.add(free_code(n, adj))
    return classes
