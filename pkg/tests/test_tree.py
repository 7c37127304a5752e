import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import treemean as tm
from treemean.errors import TreeError, TreeFormatError

from conftest import relabel, rooted_trees, trees


class TestParse:
    def test_smallest_nontrivial(self):
        t = tm.parse_tree("2\n0 1")
        assert t.n == 2 and t.edges == ((0, 1),)

    def test_comments_and_blanks_ignored(self):
        t = tm.parse_tree("# a path\n3\n\n0 1\n# middle\n1 2\n")
        assert t.n == 3 and t.edges == ((0, 1), (1, 2))

    def test_double_star_parse(self):
        t = tm.parse_tree("6\n0 2\n1 2\n2 3\n3 4\n3 5")
        assert tm.trees_isomorphic(t, tm.make_family("double_star", 2, 2))

    def test_too_many_edges(self):
        with pytest.raises(TreeFormatError) as err:
            tm.parse_tree("3\n0 1\n1 2\n0 2")
        assert err.value.reason == "edge-count"

    def test_too_few_edges(self):
        with pytest.raises(TreeFormatError) as err:
            tm.parse_tree("3\n0 1")
        assert err.value.reason == "edge-count"

    def test_bad_vertex_id(self):
        with pytest.raises(TreeFormatError) as err:
            tm.parse_tree("3\n0 1\n1 3")
        assert err.value.reason == "vertex-id"

    def test_self_loop(self):
        with pytest.raises(TreeFormatError) as err:
            tm.parse_tree("3\n0 1\n2 2")
        assert err.value.reason == "self-loop"

    def test_duplicate_edge(self):
        with pytest.raises(TreeFormatError) as err:
            tm.parse_tree("3\n0 1\n1 0")
        assert err.value.reason == "duplicate-edge"

    def test_disconnected(self):
        with pytest.raises(TreeFormatError) as err:
            tm.parse_tree("4\n0 1\n1 2\n... oops")
        assert err.value.reason == "syntax"
        with pytest.raises(TreeFormatError) as err:
            tm.parse_tree("6\n0 1\n1 2\n2 0\n3 4\n4 5")
        assert err.value.reason == "disconnected"

    def test_non_integer_order(self):
        with pytest.raises(TreeFormatError) as err:
            tm.parse_tree("three\n0 1")
        assert err.value.reason == "syntax"

    @given(trees(max_order=12))
    def test_round_trip(self, t):
        assert tm.parse_tree(tm.format_tree(t)) == t


class TestContract:
    def test_path_middle_edge(self):
        t = tm.contract_edge(tm.make_family("path", 4), (1, 2))
        assert tm.trees_isomorphic(t, tm.make_family("path", 3))

    def test_double_star_center(self):
        s22 = tm.make_family("double_star", 2, 2)
        t = tm.contract_edge(s22, (0, 1))
        assert tm.trees_isomorphic(t, tm.make_family("star", 4))

    def test_p2_to_singleton(self):
        t = tm.contract_edge(tm.Tree(2, [(0, 1)]), (0, 1))
        assert t.n == 1 and t.edges == ()

    def test_not_an_edge(self):
        with pytest.raises(TreeError) as err:
            tm.contract_edge(tm.make_family("path", 4), (0, 2))
        assert err.value.reason == "edge"

    @given(trees(min_order=2, max_order=11), st.integers(0, 2**30))
    def test_every_edge_contracts_validly(self, t, pick):
        e = t.edges[pick % len(t.edges)]
        out = tm.contract_edge(t, e)
        assert out.n == t.n - 1  # Tree() re-validated the invariants


class TestClassify:
    def test_all_path_edges_pendant(self):
        t = tm.make_family("path", 7)
        assert all(tm.classify_edge(t, e) is tm.EdgeClass.ON_PENDANT_PATH
                   for e in t.edges)

    def test_double_star_center_internal(self):
        t = tm.make_family("double_star", 2, 2)
        assert tm.classify_edge(t, (0, 1)) is tm.EdgeClass.INTERNAL
        for e in t.edges:
            if e != (0, 1):
                assert tm.classify_edge(t, e) is tm.EdgeClass.ON_PENDANT_PATH

    def test_pendant_at_path_center(self):
        t = tm.make_family("path_with_center_leaf", 8)
        pendant = next(e for e in t.edges if t.n - 1 in e)
        assert tm.classify_edge(t, pendant) is tm.EdgeClass.ON_PENDANT_PATH

    def test_star_edges_pendant(self):
        t = tm.make_family("star", 5)
        assert all(tm.classify_edge(t, e) is tm.EdgeClass.ON_PENDANT_PATH
                   for e in t.edges)

    @given(trees(min_order=6, max_order=11))
    @settings(max_examples=60)
    def test_every_edge_classified(self, t):
        for e in t.edges:
            assert tm.classify_edge(t, e) in (tm.EdgeClass.ON_PENDANT_PATH,
                                              tm.EdgeClass.INTERNAL)

    def test_corpus_has_internal_edges_from_order_six(self):
        for n in range(6, 9):
            found = False
            for t in tm.all_trees(n):
                if any(tm.classify_edge(t, e) is tm.EdgeClass.INTERNAL
                       for e in t.edges):
                    found = True
                    break
            assert found, n


class TestInternalPath:
    def test_double_star_decomposition(self):
        t = tm.make_family("double_star", 2, 2)
        d = tm.internal_path_of(t, (0, 1))
        assert d.l == 1
        p22 = tm.make_family("p22")
        for side in (d.side1, d.side2):
            assert tm.rooted_code(side.tree, side.root) == tm.rooted_code(p22.tree, p22.root)
        assert d.side1.n + d.side2.n + (d.l - 1) == t.n

    def test_two_hub_l2(self):
        # two degree-3 hubs joined through one intermediate vertex
        t = tm.make_family("dumbbell", 2, 2, 2)
        mid_edges = [e for e in t.edges
                     if tm.classify_edge(t, e) is tm.EdgeClass.INTERNAL]
        assert len(mid_edges) == 2
        for e in mid_edges:
            d = tm.internal_path_of(t, e)
            assert d.l == 2
            # all decompositions of one internal path agree
            assert d == tm.internal_path_of(t, mid_edges[0])

    def test_star_pendant_edge_rejected(self):
        t = tm.make_family("star", 4)
        with pytest.raises(TreeError) as err:
            tm.internal_path_of(t, (0, 1))
        assert err.value.reason == "classification"

    def test_interior_degrees(self):
        t = tm.make_family("dumbbell", 3, 2, 4)
        e = next(e for e in t.edges
                 if tm.classify_edge(t, e) is tm.EdgeClass.INTERNAL)
        d = tm.internal_path_of(t, e)
        assert t.degree(d.v1) >= 3 and t.degree(d.v2) >= 3
        assert d.l == 4
        assert d.side1.n + d.side2.n + d.l - 1 == t.n

    @given(trees(min_order=6, max_order=11))
    @settings(max_examples=60)
    def test_reassembly_is_isomorphic(self, t):
        for e in t.edges:
            if tm.classify_edge(t, e) is not tm.EdgeClass.INTERNAL:
                continue
            d = tm.internal_path_of(t, e)
            rebuilt = tm.assemble(d.side1, d.side2, d.l)
            assert tm.trees_isomorphic(rebuilt, t)


class TestComposition:
    def test_p22_from_two_p2(self):
        leaf_p2 = tm.RootedTree(tm.Tree(2, [(0, 1)]), 0)
        u = tm.union_at_root(leaf_p2, leaf_p2)
        p22 = tm.make_family("p22")
        assert tm.rooted_code(u.tree, u.root) == tm.rooted_code(p22.tree, p22.root)

    def test_p23_from_p2_and_p3(self):
        p2 = tm.RootedTree(tm.make_family("path", 2), 0)
        p3 = tm.RootedTree(tm.make_family("path", 3), 0)
        u = tm.union_at_root(p2, p3)
        p23 = tm.make_family("p23")
        assert tm.rooted_code(u.tree, u.root) == tm.rooted_code(p23.tree, p23.root)

    def test_union_with_singleton_is_identity(self):
        s = tm.RootedTree(tm.Tree(1, []), 0)
        t = tm.RootedTree(tm.make_family("path", 5), 2)
        u = tm.union_at_root(t, s)
        assert tm.rooted_code(u.tree, u.root) == tm.rooted_code(t.tree, t.root)

    @given(st.data())
    @settings(max_examples=60)
    def test_union_commutative_associative(self, data):
        a = data.draw(rooted_trees(max_order=6))
        b = data.draw(rooted_trees(max_order=6))
        c = data.draw(rooted_trees(max_order=5))
        ab = tm.union_at_root(a, b)
        ba = tm.union_at_root(b, a)
        assert tm.rooted_code(ab.tree, ab.root) == tm.rooted_code(ba.tree, ba.root)
        left = tm.union_at_root(tm.union_at_root(a, b), c)
        right = tm.union_at_root(a, tm.union_at_root(b, c))
        assert tm.rooted_code(left.tree, left.root) == tm.rooted_code(right.tree, right.root)

    def test_attach_path_identity_and_path(self):
        singleton = tm.RootedTree(tm.Tree(1, []), 0)
        assert tm.attach_path(singleton, 0) is singleton
        p6 = tm.attach_path(singleton, 5)
        assert tm.trees_isomorphic(p6.tree, tm.make_family("path", 6))
        assert p6.tree.degree(p6.root) == 1

    def test_attach_path_p22_gives_star_rooted_leaf(self):
        k13 = tm.attach_path(tm.make_family("p22"), 1)
        assert tm.trees_isomorphic(k13.tree, tm.make_family("star", 3))
        assert k13.tree.degree(k13.root) == 1


class TestFamilies:
    def test_p22_is_s3_rooted_center(self):
        rt = tm.make_family("p22")
        assert rt.tree.n == 3 and rt.tree.degree(rt.root) == 2

    def test_p23_is_p4_rooted_internal(self):
        rt = tm.make_family("p23")
        assert rt.tree.n == 4 and rt.tree.is_path() and rt.tree.degree(rt.root) == 2

    def test_path_with_center_leaf(self):
        t = tm.make_family("path_with_center_leaf", 6)
        # P5 plus a leaf at its middle vertex
        degs = sorted(t.degree(v) for v in range(t.n))
        assert t.n == 6 and degs == [1, 1, 1, 2, 2, 3]

    def test_dumbbell_path_vertices(self):
        t = tm.make_family("dumbbell", 3, 3, 5)
        assert t.n == 3 + 3 + 5 + 1
        hubs = [v for v in range(t.n) if t.degree(v) >= 3]
        assert len(hubs) == 2

    def test_double_star_equals_dumbbell_l1(self):
        assert tm.trees_isomorphic(tm.make_family("double_star", 3, 2),
                                   tm.make_family("dumbbell", 3, 2, 1))

    @pytest.mark.parametrize("bad", [
        ("star", 0), ("path", 0), ("double_star", 0, 1),
        ("dumbbell", 1, 1, 0), ("path_with_center_leaf", 1),
        ("p22", 1), ("nosuch",),
    ])
    def test_invalid_parameters(self, bad):
        with pytest.raises(ValueError):
            tm.make_family(*bad)


class TestCanonical:
    @given(trees(max_order=11), st.integers(0, 2**30))
    @settings(max_examples=80)
    def test_relabel_invariance(self, t, seed):
        s = relabel(t, seed)
        assert tm.canonical_code(s) == tm.canonical_code(t)
        assert tm.canonical_string(s) == tm.canonical_string(t)

    def test_distinguishes_non_isomorphic(self):
        seen = set()
        for n in range(1, 9):
            for t in tm.all_trees(n):
                code = tm.canonical_code(t)
                assert code not in seen
                seen.add(code)

    @given(trees(max_order=11))
    def test_canonical_string_parses_isomorphic(self, t):
        back = tm.parse_tree(tm.canonical_string(t).replace(";", "\n"))
        assert tm.trees_isomorphic(back, t)
