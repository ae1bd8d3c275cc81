import pytest
from hypothesis import given, strategies as st

import brute
from raagout.errors import InputError
from raagout.graph import (
    MAX_VERTICES,
    SimplicialGraph,
    connected_components,
    is_connected,
    link,
    link_of_set,
    star,
    star_complement_components,
)
from raagout.gen import named


def path3():
    return SimplicialGraph(["a", "b", "c"], [("a", "b"), ("b", "c")])


def triangle():
    return SimplicialGraph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])


@st.composite
def small_graphs(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    flags = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, f in zip(pairs, flags) if f]
    return SimplicialGraph([f"v{k}" for k in range(n)], edges)


class TestConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(InputError):
            SimplicialGraph(["a", "b"], [("a", "a")])

    def test_rejects_duplicate_names(self):
        with pytest.raises(InputError):
            SimplicialGraph(["a", "a"])

    def test_rejects_oversized(self):
        with pytest.raises(InputError):
            SimplicialGraph([f"v{i}" for i in range(MAX_VERTICES + 1)])

    def test_rejects_unknown_vertex(self):
        g = path3()
        with pytest.raises(InputError):
            link(g, "z")

    def test_adjacency_symmetric(self):
        g = path3()
        assert g.adjacent("a", "b") and g.adjacent("b", "a")
        assert not g.adjacent("a", "c")


class TestLinkStar:
    def test_path_link(self):
        g = path3()
        assert link(g, "b").names == ("a", "c")
        assert link(g, "a").names == ("b",)

    def test_isolated_vertex_link_empty(self):
        g = SimplicialGraph(["v"])
        assert link(g, "v").names == ()
        assert star(g, "v").names == ("v",)

    def test_path_star(self):
        g = path3()
        assert star(g, "b").names == ("a", "b", "c")

    def test_fig_sl2_link_and_star(self):
        g = named("fig_sl2")
        assert set(link(g, "t").names) == {"L1", "R1", "L2", "R2", "m"}
        assert set(star(g, "m").names) == {"m", "t", "b", "L1", "R1"}

    def test_link_of_set_path_ends(self):
        g = path3()
        assert link_of_set(g, ["a", "c"]).names == ("b",)

    def test_link_of_set_triangle(self):
        assert link_of_set(triangle(), ["a", "b"]).names == ("c",)

    def test_link_of_set_two_additional(self):
        g = named("two_additional")
        assert set(link_of_set(g, ["c1", "c2"]).names) == {"h1", "h2"}

    def test_link_of_set_empty_rejected(self):
        with pytest.raises(InputError):
            link_of_set(path3(), [])

    @given(small_graphs())
    def test_star_is_link_plus_vertex(self, g):
        for v in range(g.n):
            assert v not in link(g, v)
            assert set(star(g, v)) == set(link(g, v)) | {v}


class TestComponents:
    def test_path_ends_split(self):
        g = path3()
        assert [c.names for c in connected_components(g, ["a", "c"])] == [("a",), ("c",)]

    def test_empty_input(self):
        assert connected_components(path3(), []) == []

    def test_fig_sl2_star_complement_of_m(self):
        g = named("fig_sl2")
        comps = star_complement_components(g, "m")
        assert [c.names for c in comps] == [("L2", "R2")]

    def test_star_complement_of_path_center_empty(self):
        assert star_complement_components(path3(), "b") == []

    def test_three_isolated(self):
        g = SimplicialGraph(["a", "b", "c"])
        comps = star_complement_components(g, "a")
        assert [c.names for c in comps] == [("b",), ("c",)]

    @given(small_graphs())
    def test_components_partition_vs_oracle(self, g):
        nbr = brute.neighbor_sets(g)
        for v in range(g.n):
            got = {frozenset(c) for c in star_complement_components(g, v)}
            want = brute.star_complement_comps(g, nbr, v)
            assert got == want

    @given(small_graphs())
    def test_components_sorted_and_disjoint(self, g):
        comps = connected_components(g, range(g.n))
        seen = set()
        leasts = []
        for c in comps:
            members = set(c)
            assert not members & seen
            seen |= members
            leasts.append(min(members))
        assert seen == set(range(g.n))
        assert leasts == sorted(leasts)


def test_determinism_identical_inputs():
    mk = lambda: named("gamma3")
    a, b = mk(), mk()
    assert a == b
    assert [c.names for c in star_complement_components(a, "w1")] == [
        c.names for c in star_complement_components(b, "w1")
    ]


def test_is_connected():
    assert is_connected(path3())
    assert not is_connected(SimplicialGraph(["a", "b"]))
