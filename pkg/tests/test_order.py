import pytest
from hypothesis import given

import brute
from raagout.errors import InputError
from raagout.gen import gamma_pqr, named
from raagout.graph import SimplicialGraph, link
from raagout.order import (
    equivalence_classes,
    has_no_transvection,
    leaf_like,
    leq,
    maximal_vertices,
    order_pairs,
    related_unordered_pairs,
)

from test_graph import small_graphs, path3, triangle


class TestLeq:
    def test_isolated_pair(self):
        g = SimplicialGraph(["a", "b"])
        assert leq(g, "a", "b") and leq(g, "b", "a")

    def test_path(self):
        g = path3()
        assert leq(g, "a", "b")
        assert not leq(g, "b", "a")

    def test_fig_sl2_m_not_below_t(self):
        g = named("fig_sl2")
        assert not leq(g, "m", "t")  # b is a neighbor of m outside st(t)

    def test_equal_vertices_rejected(self):
        with pytest.raises(InputError):
            leq(path3(), "a", "a")

    @given(small_graphs())
    def test_matches_set_inclusion(self, g):
        nbr = brute.neighbor_sets(g)
        for v in range(g.n):
            for w in range(g.n):
                if v != w:
                    assert leq(g, v, w) == brute.leq(nbr, v, w)

    @given(small_graphs())
    def test_transitive_on_distinct_triples(self, g):
        for a in range(g.n):
            for b in range(g.n):
                for c in range(g.n):
                    if len({a, b, c}) == 3 and leq(g, a, b) and leq(g, b, c):
                        assert leq(g, a, c)


class TestOrderPairs:
    def test_triangle_all_related(self):
        assert len(order_pairs(triangle())) == 6

    def test_fig_sl2_exactly_tip_pair(self):
        g = named("fig_sl2")
        names = {(g.names[a], g.names[b]) for a, b in order_pairs(g)}
        assert names == {("t", "b"), ("b", "t")}

    def test_gamma_222_has_none(self):
        assert has_no_transvection(gamma_pqr(2, 2, 2))

    def test_gamma_243_has_none(self):
        assert has_no_transvection(named("gamma_243"))

    def test_no_transvection_iff_empty(self):
        assert has_no_transvection(SimplicialGraph(["v"]))
        assert not has_no_transvection(path3())


class TestEquivalenceClasses:
    def test_triangle_single_class(self):
        cls = equivalence_classes(triangle())
        assert len(cls) == 1 and set(cls[0].members) == {0, 1, 2}

    def test_path_two_classes(self):
        cls = equivalence_classes(path3())
        assert [c.members.names for c in cls] == [("a", "c"), ("b",)]

    def test_fig_sl2_tip_class_plus_singletons(self):
        g = named("fig_sl2")
        sizes = sorted(len(c.members) for c in equivalence_classes(g))
        assert sizes == [1, 1, 1, 1, 1, 2]
        big = next(c for c in equivalence_classes(g) if len(c.members) == 2)
        assert set(big.members.names) == {"t", "b"}

    @given(small_graphs())
    def test_partition_matches_pairwise_oracle(self, g):
        nbr = brute.neighbor_sets(g)
        cls = equivalence_classes(g)
        covered = set()
        for c in cls:
            covered |= set(c.members)
        assert covered == set(range(g.n))
        assigned = {}
        for c in cls:
            for v in c.members:
                assigned[v] = c.representative
        for v in range(g.n):
            for w in range(g.n):
                if v != w:
                    mutual = brute.leq(nbr, v, w) and brute.leq(nbr, w, v)
                    assert mutual == (assigned[v] == assigned[w])

    @given(small_graphs())
    def test_equivalent_pair_link_dichotomy(self, g):
        nbr = brute.neighbor_sets(g)
        for v in range(g.n):
            for w in range(v + 1, g.n):
                if brute.leq(nbr, v, w) and brute.leq(nbr, w, v):
                    if w in nbr[v]:
                        assert nbr[v] - {w} == nbr[w] - {v}
                    else:
                        assert nbr[v] == nbr[w]


class TestMaximal:
    def test_triangle(self):
        assert set(maximal_vertices(triangle()).names) == {"a", "b", "c"}

    def test_path_center_only(self):
        assert maximal_vertices(path3()).names == ("b",)

    def test_two_isolated(self):
        g = SimplicialGraph(["a", "b"])
        assert set(maximal_vertices(g).names) == {"a", "b"}

    @given(small_graphs())
    def test_definition_via_order_pairs(self, g):
        pairs = set(order_pairs(g))
        maximal = set(maximal_vertices(g))
        for v in range(g.n):
            expect = all((w, v) in pairs for (x, w) in pairs if x == v)
            assert (v in maximal) == expect


class TestLeafLike:
    def test_star_leaves(self):
        g = SimplicialGraph(["c", "a", "b", "d"], [("c", "a"), ("c", "b"), ("c", "d")])
        assert leaf_like(g, "a") == g.index("c")
        assert leaf_like(g, "c") is None

    def test_triangle_none(self):
        g = triangle()
        assert all(leaf_like(g, v) is None for v in range(3))

    def test_isolated_none(self):
        assert leaf_like(SimplicialGraph(["v"]), "v") is None

    def test_witness_is_unique_maximal_in_link(self):
        g = named("fig_sl2")
        for v in range(g.n):
            w = leaf_like(g, v)
            if w is not None:
                maximal = set(maximal_vertices(g))
                in_link = [x for x in link(g, v) if x in maximal]
                assert in_link == [w]


def test_related_unordered_pairs_dedup():
    g = SimplicialGraph(["a", "b"])
    assert related_unordered_pairs(g) == [(0, 1)]
