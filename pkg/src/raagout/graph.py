"""Finite simplicial graphs and bitset-backed subgraph primitives.

A graph fixes its vertex order at construction, and every derived vertex
set is reported in ascending index order, so identical inputs produce
byte-identical outputs everywhere downstream. Adjacency lives in one
integer bitmask per vertex, which keeps links, stars, and connected
components down to a handful of big-integer operations.

Everything here is immutable after construction and safe to read from
concurrent tasks.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence, Union

from .errors import InputError

# Generous cap: the fixtures are tiny and the Monte Carlo harness tops out
# at a few hundred vertices. Larger inputs are rejected, never truncated.
MAX_VERTICES = 512

VertexRef = Union[int, str]


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class SimplicialGraph:
    """Symmetric irreflexive adjacency over a fixed, ordered vertex list.

    Vertices may be addressed by name or by index in every operation.

    >>> g = SimplicialGraph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    >>> g.n
    3
    >>> g.adjacent("a", "c")
    False
    """

    __slots__ = ("names", "n", "adj", "full_mask", "_index")

    def __init__(self, names: Sequence[str], edges: Iterable[tuple] = ()) -> None:
        names = tuple(str(x) for x in names)
        if not len(names):
            raise InputError("a graph needs at least one vertex")
        if len(names) > MAX_VERTICES:
            raise InputError(
                f"graph has {len(names)} vertices; at most {MAX_VERTICES} are supported"
            )
        if len(set(names)) != len(names):
            raise InputError("vertex names must be unique")
        self.names = names
        self.n = len(names)
        self._index = {name: i for i, name in enumerate(names)}
        adj = [0] * self.n
        for u, v in edges:
            i, j = self._resolve(u), self._resolve(v)
            if i == j:
                raise InputError(f"self-loop at vertex {names[i]!r}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self.adj = tuple(adj)
        self.full_mask = (1 << self.n) - 1

    def _resolve(self, v: VertexRef) -> int:
        if isinstance(v, str):
            try:
                return self._index[v]
            except KeyError:
                raise InputError(f"unknown vertex {v!r}") from None
        i = int(v)
        if not 0 <= i < self.n:
            raise InputError(f"vertex index {i} out of range")
        return i

    def index(self, v: VertexRef) -> int:
        """Dense index of a vertex given by name or index."""
        return self._resolve(v)

    def name(self, i: int) -> str:
        return self.names[i]

    def adjacent(self, u: VertexRef, v: VertexRef) -> bool:
        return bool(self.adj[self._resolve(u)] >> self._resolve(v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (i, j) index pairs with i < j, ascending."""
        out = []
        for i in range(self.n):
            for j in _iter_bits(self.adj[i] >> (i + 1) << (i + 1)):
                out.append((i, j))
        return out

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def vertex_set(self, members: Iterable[VertexRef] = (), mask: int | None = None) -> "VertexSet":
        if mask is None:
            mask = 0
            for v in members:
                mask |= 1 << self._resolve(v)
        return VertexSet(self, mask)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SimplicialGraph)
            and self.names == other.names
            and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.names, self.adj))

    def __repr__(self) -> str:
        return f"SimplicialGraph({self.n} vertices, {self.edge_count()} edges)"


class VertexSet:
    """A subset of a graph's vertices, iterated in ascending index order.

    Acts as both the spec's vertex-set value and the handle for induced
    subgraphs: components are computed lazily from (parent, mask) without
    copying adjacency.
    """

    __slots__ = ("graph", "mask")

    def __init__(self, graph: SimplicialGraph, mask: int) -> None:
        if mask & ~graph.full_mask:
            raise InputError("vertex set mask exceeds parent graph")
        self.graph = graph
        self.mask = mask

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(_iter_bits(self.mask))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.graph.names[i] for i in _iter_bits(self.mask))

    def __iter__(self) -> Iterator[int]:
        return _iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: VertexRef) -> bool:
        return bool(self.mask >> self.graph.index(v) & 1)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexSet):
            return self.mask == other.mask and self.graph is other.graph
        return NotImplemented

    def __hash__(self) -> int:
        return hash((id(self.graph), self.mask))

    def __repr__(self) -> str:
        return "{" + ",".join(self.names) + "}"


def link_mask(g: SimplicialGraph, v: VertexRef) -> int:
    return g.adj[g.index(v)]


def star_mask(g: SimplicialGraph, v: VertexRef) -> int:
    i = g.index(v)
    return g.adj[i] | (1 << i)


def link(g: SimplicialGraph, v: VertexRef) -> VertexSet:
    """Neighbors of ``v``; never contains ``v`` itself.

    >>> g = SimplicialGraph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    >>> link(g, "b").names
    ('a', 'c')
    """
    return VertexSet(g, link_mask(g, v))


def star(g: SimplicialGraph, v: VertexRef) -> VertexSet:
    """Neighbors of ``v`` together with ``v``.

    >>> g = SimplicialGraph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    >>> star(g, "b").names
    ('a', 'b', 'c')
    """
    return VertexSet(g, star_mask(g, v))


def link_of_set(g: SimplicialGraph, s: Iterable[VertexRef] | VertexSet) -> VertexSet:
    """Common neighbors of every vertex in ``s``.

    An empty ``s`` is rejected: the all-vertices convention for an empty
    intersection would silently corrupt every caller.
    """
    if isinstance(s, VertexSet):
        indices = list(s)
    else:
        indices = [g.index(v) for v in s]
    if not indices:
        raise InputError("link_of_set needs a nonempty vertex set")
    mask = g.full_mask
    for i in indices:
        mask &= g.adj[i]
    return VertexSet(g, mask)


def mask_components(g: SimplicialGraph, mask: int) -> list[int]:
    """Connected components of the induced subgraph on ``mask``, as masks.

    Output is ordered by least member, which is the canonical order used
    everywhere in the package.
    """
    adj = g.adj
    comps = []
    rest = mask
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            grow = 0
            for i in _iter_bits(frontier):
                grow |= adj[i]
            frontier = grow & mask & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def connected_components(g: SimplicialGraph, s: Iterable[VertexRef] | VertexSet) -> list[VertexSet]:
    """Partition of ``s`` into maximal connected pieces of the induced subgraph.

    >>> g = SimplicialGraph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    >>> connected_components(g, ["a", "c"])
    [{a}, {c}]
    >>> connected_components(g, [])
    []
    """
    if isinstance(s, VertexSet):
        mask = s.mask
    else:
        mask = 0
        for v in s:
            mask |= 1 << g.index(v)
    return [VertexSet(g, m) for m in mask_components(g, mask)]


def star_complement_components(g: SimplicialGraph, v: VertexRef) -> list[VertexSet]:
    """Connected components of the graph minus the closed star of ``v``."""
    return [VertexSet(g, m) for m in mask_components(g, g.full_mask & ~star_mask(g, v))]


def is_connected(g: SimplicialGraph) -> bool:
    return len(mask_components(g, g.full_mask)) <= 1
