import random

import pytest
from hypothesis import strategies as st

import treemean as tm


@st.composite
def trees(draw, min_order=1, max_order=10):
    """Uniform random labeled trees via seeded Prüfer decoding."""
    n = draw(st.integers(min_order, max_order))
    seed = draw(st.integers(0, 2**32 - 1))
    return tm.random_tree(n, seed)


@st.composite
def rooted_trees(draw, min_order=1, max_order=10, min_root_degree=0):
    t = draw(trees(min_order=max(min_order, min_root_degree + 1),
                   max_order=max_order))
    roots = [v for v in range(t.n) if t.degree(v) >= min_root_degree]
    if not roots:
        # regenerate degenerate draws (e.g. a path when degree 3+ is asked)
        t = tm.make_family("star", max(2, min_root_degree))
        roots = [0]
    return tm.RootedTree(t, draw(st.sampled_from(roots)))


def relabel(t: tm.Tree, seed: int) -> tm.Tree:
    """The same tree under a random vertex permutation."""
    rng = random.Random(seed)
    perm = list(range(t.n))
    rng.shuffle(perm)
    return tm.Tree(t.n, [(perm[u], perm[v]) for u, v in t.edges])


def seeded_rooted_side(rng: random.Random, max_order=8) -> tm.RootedTree:
    """Random rooted tree of order <= max_order with root degree >= 2."""
    while True:
        n = rng.randint(3, max_order)
        t = tm.random_tree(n, rng.getrandbits(48))
        roots = [v for v in range(n) if t.degree(v) >= 2]
        if roots:
            return tm.RootedTree(t, rng.choice(roots))


@pytest.fixture
def tmp_tree_file(tmp_path):
    def write(t: tm.Tree, name="input.tree"):
        path = tmp_path / name
        path.write_text(tm.format_tree(t))
        return str(path)

    return write
