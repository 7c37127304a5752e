# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: the hot inner loops of the corpus scans.

Same contracts as the pure-Python twins in ``_kernels_py``.  The stats
fold uses C int64, which is exact for the orders the dispatcher routes
here (see _backend.C_STATS_MAX_ORDER); canonical codes and the Prüfer
class enumeration are plain byte/array work at any order the dispatcher
allows.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdlib cimport free, malloc
from libc.string cimport memcmp, memcpy

__all__ = [
    "root_stats",
    "all_root_stats",
    "rooted_code",
    "free_code",
    "prufer_classes",
]


cdef struct Buffers:
    int n
    int *xadj
    int *adjncy
    int *order
    int *parent
    int *scratch      # kids / queue / degrees, n slots each, 3 blocks
    int *off
    int *ln
    long long *nv
    long long *rv
    long long *nt
    long long *rt
    char *arena
    char *hold


cdef int _alloc(Buffers *b, int n) except -1:
    cdef size_t arena_bytes = <size_t> n * (n + 1) + 4
    b.n = n
    b.xadj = <int *> malloc((n + 1) * sizeof(int))
    b.adjncy = <int *> malloc((2 * n) * sizeof(int))
    b.order = <int *> malloc(n * sizeof(int))
    b.parent = <int *> malloc(n * sizeof(int))
    b.scratch = <int *> malloc((3 * n) * sizeof(int))
    b.off = <int *> malloc(n * sizeof(int))
    b.ln = <int *> malloc(n * sizeof(int))
    b.nv = <long long *> malloc(n * sizeof(long long))
    b.rv = <long long *> malloc(n * sizeof(long long))
    b.nt = <long long *> malloc(n * sizeof(long long))
    b.rt = <long long *> malloc(n * sizeof(long long))
    b.arena = <char *> malloc(arena_bytes)
    b.hold = <char *> malloc(2 * n + 4)
    if (b.xadj == NULL or b.adjncy == NULL or b.order == NULL
            or b.parent == NULL or b.scratch == NULL or b.off == NULL
            or b.ln == NULL or b.nv == NULL or b.rv == NULL or b.nt == NULL
            or b.rt == NULL or b.arena == NULL or b.hold == NULL):
        _release(b)
        raise MemoryError()
    return 0


cdef void _release(Buffers *b):
    free(b.xadj); free(b.adjncy); free(b.order); free(b.parent)
    free(b.scratch); free(b.off); free(b.ln)
    free(b.nv); free(b.rv); free(b.nt); free(b.rt)
    free(b.arena); free(b.hold)


cdef int _csr_from_adj(Buffers *b, object adj) except -1:
    cdef int n = b.n
    cdef int v, w, k = 0
    for v in range(n):
        b.xadj[v] = k
        for w in adj[v]:
            b.adjncy[k] = w
            k += 1
    b.xadj[n] = k
    return 0


cdef void _bfs(Buffers *b, int root):
    cdef int n = b.n
    cdef int head = 0, tail = 1, v, w, j
    for v in range(n):
        b.parent[v] = -2
    b.parent[root] = -1
    b.order[0] = root
    while head < tail:
        v = b.order[head]
        head += 1
        for j in range(b.xadj[v], b.xadj[v + 1]):
            w = b.adjncy[j]
            if b.parent[w] == -2:
                b.parent[w] = v
                b.order[tail] = w
                tail += 1


cdef void _fold(Buffers *b, int root):
    """Post-order fold of the (n_v, r_v, n_t, r_t) recurrences, int64."""
    cdef int n = b.n
    cdef int idx, v, w, j
    cdef long long en, er, ent, ert, un, ur, unt, urt
    _bfs(b, root)
    for idx in range(n - 1, -1, -1):
        v = b.order[idx]
        b.nv[v] = 1; b.rv[v] = 1; b.nt[v] = 1; b.rt[v] = 1
        for j in range(b.xadj[v], b.xadj[v + 1]):
            w = b.adjncy[j]
            if w != b.parent[v]:
                en = b.nv[w] + 1
                er = b.rv[w] + b.nv[w] + 1
                ent = b.nt[w] + b.nv[w] + 1
                ert = b.rt[w] + b.rv[w] + b.nv[w] + 1
                un = b.nv[v] * en
                ur = b.nv[v] * er + en * b.rv[v] - un
                unt = un + b.nt[v] - b.nv[v] + ent - en
                urt = ur + b.rt[v] - b.rv[v] + ert - er
                b.nv[v] = un; b.rv[v] = ur; b.nt[v] = unt; b.rt[v] = urt


cdef bint _code_greater(char *arena, int oa, int la, int ob, int lb):
    cdef int m = la if la < lb else lb
    cdef int c = memcmp(arena + oa, arena + ob, m)
    if c != 0:
        return c > 0
    return la > lb


cdef void _encode(Buffers *b, int root):
    """Canonical rooted code into the arena; b.off/b.ln[root] locate it."""
    cdef int n = b.n
    cdef int idx, v, w, j, i, k, nk, top = 0, start
    cdef int *kids = b.scratch
    _bfs(b, root)
    for idx in range(n - 1, -1, -1):
        v = b.order[idx]
        nk = 0
        for j in range(b.xadj[v], b.xadj[v + 1]):
            w = b.adjncy[j]
            if w != b.parent[v]:
                kids[nk] = w
                nk += 1
        for i in range(1, nk):
            w = kids[i]
            k = i - 1
            while k >= 0 and _code_greater(b.arena, b.off[kids[k]], b.ln[kids[k]],
                                           b.off[w], b.ln[w]):
                kids[k + 1] = kids[k]
                k -= 1
            kids[k + 1] = w
        start = top
        b.arena[top] = b'('
        top += 1
        for i in range(nk):
            memcpy(b.arena + top, b.arena + b.off[kids[i]], b.ln[kids[i]])
            top += b.ln[kids[i]]
        b.arena[top] = b')'
        top += 1
        b.off[v] = start
        b.ln[v] = top - start


cdef int _find_centers(Buffers *b, int *c1, int *c2):
    """Number of tree centers (1 or 2) by leaf peeling."""
    cdef int n = b.n
    cdef int v, w, j, head = 0, tail = 0, removed = 0, layer_end
    cdef int *deg = b.scratch + b.n        # second scratch block
    cdef int *queue = b.scratch + 2 * b.n  # third scratch block
    if n == 1:
        c1[0] = 0
        return 1
    for v in range(n):
        deg[v] = b.xadj[v + 1] - b.xadj[v]
        if deg[v] == 1:
            queue[tail] = v
            tail += 1
    while removed + (tail - head) < n:
        layer_end = tail
        removed += layer_end - head
        while head < layer_end:
            v = queue[head]
            head += 1
            for j in range(b.xadj[v], b.xadj[v + 1]):
                w = b.adjncy[j]
                deg[w] -= 1
                if deg[w] == 1:
                    queue[tail] = w
                    tail += 1
    c1[0] = queue[head]
    if tail - head == 2:
        c2[0] = queue[head + 1]
    return tail - head


cdef bytes _free_code(Buffers *b):
    cdef int c1 = 0, c2 = 0, count, len1, m, c
    count = _find_centers(b, &c1, &c2)
    _encode(b, c1)
    if count == 1:
        return PyBytes_FromStringAndSize(b.arena + b.off[c1], b.ln[c1])
    len1 = b.ln[c1]
    memcpy(b.hold, b.arena + b.off[c1], len1)
    _encode(b, c2)
    m = len1 if len1 < b.ln[c2] else b.ln[c2]
    c = memcmp(b.hold, b.arena + b.off[c2], m)
    if c < 0 or (c == 0 and len1 <= b.ln[c2]):
        return PyBytes_FromStringAndSize(b.hold, len1)
    return PyBytes_FromStringAndSize(b.arena + b.off[c2], b.ln[c2])


# ---------------------------------------------------------------------------
# public entry points

def root_stats(int n, adj, int root):
    """Exact (n_v, r_v, n_t, r_t) for the tree rooted at `root` (int64)."""
    cdef Buffers b
    _alloc(&b, n)
    try:
        _csr_from_adj(&b, adj)
        _fold(&b, root)
        return (b.nv[root], b.rv[root], b.nt[root], b.rt[root])
    finally:
        _release(&b)


def all_root_stats(int n, adj):
    """Quadruples for every root, indexed by vertex id."""
    cdef Buffers b
    cdef int v
    _alloc(&b, n)
    try:
        _csr_from_adj(&b, adj)
        out = []
        for v in range(n):
            _fold(&b, v)
            out.append((b.nv[v], b.rv[v], b.nt[v], b.rt[v]))
        return out
    finally:
        _release(&b)


def rooted_code(int n, adj, int root):
    """Canonical encoding of a rooted tree: sorted child codes in parens."""
    cdef Buffers b
    _alloc(&b, n)
    try:
        _csr_from_adj(&b, adj)
        _encode(&b, root)
        return PyBytes_FromStringAndSize(b.arena + b.off[root], b.ln[root])
    finally:
        _release(&b)


def free_code(int n, adj):
    """Canonical encoding of a free tree: minimum center-rooted code."""
    cdef Buffers b
    _alloc(&b, n)
    try:
        _csr_from_adj(&b, adj)
        return _free_code(&b)
    finally:
        _release(&b)


def prufer_classes(int n):
    """Canonical codes of all isomorphism classes of order n via full
    Prüfer enumeration; cost n^(n-2), budget enforced by the caller."""
    cdef Buffers b
    cdef int *seq
    cdef int *eu
    cdef int *ev
    cdef int *degp
    cdef int *pos
    cdef int i, v, w, k, ptr, leaf, carry
    cdef unsigned long long total, it
    if n == 1:
        return {b"()"}
    _alloc(&b, n)
    seq = <int *> malloc((n + 2) * sizeof(int))
    eu = <int *> malloc(n * sizeof(int))
    ev = <int *> malloc(n * sizeof(int))
    degp = <int *> malloc(n * sizeof(int))
    pos = <int *> malloc(n * sizeof(int))
    if seq == NULL or eu == NULL or ev == NULL or degp == NULL or pos == NULL:
        free(seq); free(eu); free(ev); free(degp); free(pos)
        _release(&b)
        raise MemoryError()
    classes = set()
    try:
        total = 1
        for i in range(n - 2):
            seq[i] = 0
            total *= n
        for it in range(total):
            # decode seq into the edge arrays
            for v in range(n):
                degp[v] = 1
            for i in range(n - 2):
                degp[seq[i]] += 1
            ptr = 0
            while degp[ptr] != 1:
                ptr += 1
            leaf = ptr
            for i in range(n - 2):
                v = seq[i]
                eu[i] = leaf
                ev[i] = v
                degp[v] -= 1
                if degp[v] == 1 and v < ptr:
                    leaf = v
                else:
                    ptr += 1
                    while degp[ptr] != 1:
                        ptr += 1
                    leaf = ptr
            eu[n - 2] = leaf
            ev[n - 2] = n - 1
            # CSR
            for v in range(n):
                degp[v] = 0
            for i in range(n - 1):
                degp[eu[i]] += 1
                degp[ev[i]] += 1
            b.xadj[0] = 0
            for v in range(n):
                b.xadj[v + 1] = b.xadj[v] + degp[v]
                pos[v] = b.xadj[v]
            for i in range(n - 1):
                b.adjncy[pos[eu[i]]] = ev[i]
                pos[eu[i]] += 1
                b.adjncy[pos[ev[i]]] = eu[i]
                pos[ev[i]] += 1
            classes.add(_free_code(&b))
            # next sequence
            k = n - 3
            while k >= 0:
                seq[k] += 1
                if seq[k] < n:
                    break
                seq[k] = 0
                k -= 1
        return classes
    finally:
        free(seq); free(eu); free(ev); free(degp); free(pos)
        _release(&b)
