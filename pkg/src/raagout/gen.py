"""Deterministic graph constructors: named fixtures, polygon families, random graphs.

Fixture transcription convention: a dot drawn on a straight segment
subdivides it, so a segment through k interior dots contributes k+1
edges. Each fixture's docstring records which drawn segments became
edges under that rule; the vertex naming schema is frozen so that
certificates and golden files stay stable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graph import SimplicialGraph

_M64 = (1 << 64) - 1


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _M64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return z ^ (z >> 31)


def hash_u64(*parts: int) -> int:
    """Counter-style hash chain; the package's single source of randomness."""
    h = 0
    for p in parts:
        h = _splitmix64(h ^ (p & _M64))
    return h


@dataclass(frozen=True)
class GnpConfig:
    n: int
    p: float
    seed: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InputError("random graphs need at least one vertex")
        if not 0.0 <= self.p <= 1.0:
            raise InputError("edge probability must lie in [0, 1]")


def gnp(config: GnpConfig) -> SimplicialGraph:
    """Erdos-Renyi sample; each unordered pair is an edge independently.

    Edge decisions are keyed by (seed, i, j), so a fixed config always
    yields the same graph regardless of platform or process.
    """
    names = [f"v{i}" for i in range(config.n)]
    edges = []
    for i in range(config.n):
        for j in range(i + 1, config.n):
            u = hash_u64(config.seed, i, j) / 2.0**64
            if u < config.p:
                edges.append((i, j))
    return SimplicialGraph(names, edges)


def lambda_graph(m: int) -> SimplicialGraph:
    """Polygon-with-two-apexes family.

    For m >= 3: a 3m-cycle r1,u1,b1,...,rm,um,bm plus apexes gt, gb,
    where every b vertex joins both apexes, every r vertex joins gt, and
    every u vertex joins gb. For m = 2 the member is smaller: the path
    b1-r1-u1-b2 with b1, b2 joined to both apexes, r1 to gt, u1 to gb
    (six vertices, nine edges).
    """
    if m < 2:
        raise InputError("the polygon family starts at m = 2")
    if m == 2:
        names = ["b1", "r1", "u1", "b2", "gt", "gb"]
        edges = [
            ("b1", "r1"),
            ("r1", "u1"),
            ("u1", "b2"),
            ("r1", "gt"),
            ("u1", "gb"),
            ("b1", "gt"),
            ("b1", "gb"),
            ("b2", "gt"),
            ("b2", "gb"),
        ]
        return SimplicialGraph(names, edges)
    cycle = []
    for k in range(1, m + 1):
        cycle.extend([f"r{k}", f"u{k}", f"b{k}"])
    names = cycle + ["gt", "gb"]
    edges = [(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]
    for k in range(1, m + 1):
        edges.append((f"b{k}", "gt"))
        edges.append((f"b{k}", "gb"))
        edges.append((f"r{k}", "gt"))
        edges.append((f"u{k}", "gb"))
    return SimplicialGraph(names, edges)


def gamma_pqr(p: int, q: int, r: int) -> SimplicialGraph:
    """Three polygon-family members glued along their apexes.

    Block vertices carry prefixes a/b/c; the top apexes are identified
    into ``gt`` and the bottom ones into ``gb``.
    """
    for value in (p, q, r):
        if value < 2:
            raise InputError("all three block parameters must be at least 2")
    names: list[str] = []
    edges: list[tuple[str, str]] = []
    for prefix, m in (("a", p), ("b", q), ("c", r)):
        block = lambda_graph(m)
        rename = {
            name: ("gt" if name == "gt" else "gb" if name == "gb" else prefix + name)
            for name in block.names
        }
        names.extend(rename[x] for x in block.names if x not in ("gt", "gb"))
        for i, j in block.edges():
            edges.append((rename[block.names[i]], rename[block.names[j]]))
    names.extend(["gt", "gb"])
    return SimplicialGraph(names, edges)


def _fixture_fig_sl2() -> SimplicialGraph:
    # Seven vertices: top t, middle m, bottom b, outer pair L1/R1, inner
    # pair L2/R2. Drawn segments give 15 edges; no dot subdivides any
    # segment in this figure.
    names = ["t", "m", "b", "L1", "R1", "L2", "R2"]
    edges = [
        ("t", "m"),
        ("t", "L1"),
        ("t", "R1"),
        ("t", "L2"),
        ("t", "R2"),
        ("m", "b"),
        ("m", "L1"),
        ("m", "R1"),
        ("b", "L1"),
        ("b", "R1"),
        ("b", "L2"),
        ("b", "R2"),
        ("L1", "L2"),
        ("R1", "R2"),
        ("L2", "R2"),
    ]
    return SimplicialGraph(names, edges)


def _fixture_gamma1() -> SimplicialGraph:
    # Three middle vertices joined to both hubs, plus a two-vertex flap
    # d1-d2 hanging off the hubs (d1 on l1, d2 on l2).
    names = ["v1", "v2", "v3", "l1", "l2", "d1", "d2"]
    edges = [
        ("v1", "l1"),
        ("v1", "l2"),
        ("v2", "l1"),
        ("v2", "l2"),
        ("v3", "l1"),
        ("v3", "l2"),
        ("d1", "l1"),
        ("d2", "l2"),
        ("d1", "d2"),
    ]
    return SimplicialGraph(names, edges)


def _block_names(i: int) -> list[str]:
    return [f"w{i}", f"v{i}", f"v{i}p", f"w{i}p"]


def _fixture_gamma2() -> SimplicialGraph:
    # Three vertical 4-paths w_i - v_i - v_i' - w_i' between hubs h1/h2.
    # The drawn verticals carry two interior dots each, so the interior
    # vertices v_i, v_i' exist but touch no hub; only w_i and w_i' join
    # both hubs.
    names: list[str] = []
    edges: list[tuple[str, str]] = []
    for i in (1, 2, 3):
        w, v, vp, wp = _block_names(i)
        names.extend([w, v, vp, wp])
        edges.extend([(w, v), (v, vp), (vp, wp)])
        for end in (w, wp):
            edges.extend([(end, "h1"), (end, "h2")])
    names.extend(["h1", "h2"])
    return SimplicialGraph(names, edges)


def _fixture_gamma3() -> SimplicialGraph:
    # Same three 4-paths as gamma2, but each interior vertex additionally
    # joins one hub: v_i to h2 and v_i' to h1 (the extra drawn slants).
    names: list[str] = []
    edges: list[tuple[str, str]] = []
    for i in (1, 2, 3):
        w, v, vp, wp = _block_names(i)
        names.extend([w, v, vp, wp])
        edges.extend([(w, v), (v, vp), (vp, wp)])
        for end in (w, wp):
            edges.extend([(end, "h1"), (end, "h2")])
        edges.append((v, "h2"))
        edges.append((vp, "h1"))
    names.extend(["h1", "h2"])
    return SimplicialGraph(names, edges)


def _fixture_two_additional() -> SimplicialGraph:
    # Two center vertices c1/c2 joined to both hubs, plus two flaps:
    # a1-a2 (ends on the hubs, drawn as the outer arc) and b1-b2 (the
    # inner arc).
    names = ["h1", "h2", "c1", "c2", "a1", "a2", "b1", "b2"]
    edges = [
        ("c1", "h1"),
        ("c1", "h2"),
        ("c2", "h1"),
        ("c2", "h2"),
        ("a1", "h1"),
        ("a2", "h2"),
        ("a1", "a2"),
        ("b1", "h1"),
        ("b2", "h2"),
        ("b1", "b2"),
    ]
    return SimplicialGraph(names, edges)


def _fixture_decomp_left() -> SimplicialGraph:
    # Three spokes w1..w3, each joined to both hubs; nothing else.
    names = ["w1", "w2", "w3", "h1", "h2"]
    edges = [(w, h) for w in ("w1", "w2", "w3") for h in ("h1", "h2")]
    return SimplicialGraph(names, edges)


def _fixture_decomp_right() -> SimplicialGraph:
    # Two spokes joined to both hubs plus one flap d1-d2 across the hubs.
    names = ["w1", "w2", "h1", "h2", "d1", "d2"]
    edges = [
        ("w1", "h1"),
        ("w1", "h2"),
        ("w2", "h1"),
        ("w2", "h2"),
        ("d1", "h1"),
        ("d2", "h2"),
        ("d1", "d2"),
    ]
    return SimplicialGraph(names, edges)


_FIXTURES = {
    "fig_sl2": _fixture_fig_sl2,
    "gamma1": _fixture_gamma1,
    "gamma2": _fixture_gamma2,
    "gamma3": _fixture_gamma3,
    "two_additional": _fixture_two_additional,
    "decomp_left": _fixture_decomp_left,
    "decomp_right": _fixture_decomp_right,
    "gamma_243": lambda: gamma_pqr(2, 4, 3),
}


def fixture_names() -> list[str]:
    return sorted(_FIXTURES)


def named(name: str) -> SimplicialGraph:
    """One of the documented figure fixtures by name."""
    try:
        builder = _FIXTURES[name]
    except KeyError:
        raise InputError(
            f"unknown fixture {name!r}; known: {', '.join(fixture_names())}"
        ) from None
    return builder()


# Canonical vertex correspondence between the glued family at (2,2,2) and
# the gamma3 fixture; the two graphs are isomorphic under it.
GAMMA3_CANONICAL_MAP = {
    "ab1": "w1", "ar1": "v1", "au1": "v1p", "ab2": "w1p",
    "bb1": "w2", "br1": "v2", "bu1": "v2p", "bb2": "w2p",
    "cb1": "w3", "cr1": "v3", "cu1": "v3p", "cb2": "w3p",
    "gt": "h2", "gb": "h1",
}
