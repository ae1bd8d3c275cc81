"""Independent brute-force oracles, kept deliberately naive.

Everything here works on plain dicts and sets rebuilt from a graph's
edge list, sharing no algorithmic code with the package, so that
agreement between the two is meaningful evidence.
"""

from itertools import combinations


def neighbor_sets(g):
    nbr = {i: set() for i in range(g.n)}
    for i, j in g.edges():
        nbr[i].add(j)
        nbr[j].add(i)
    return nbr


def components(vertices, nbr):
    """Connected components of the induced subgraph, as a set of frozensets."""
    remaining = set(vertices)
    out = set()
    while remaining:
        seed = next(iter(remaining))
        comp = {seed}
        stack = [seed]
        while stack:
            x = stack.pop()
            for y in nbr[x]:
                if y in remaining and y not in comp:
                    comp.add(y)
                    stack.append(y)
        out.add(frozenset(comp))
        remaining -= comp
    return out


def link(nbr, v):
    return set(nbr[v])


def star(nbr, v):
    return set(nbr[v]) | {v}


def leq(nbr, v, w):
    return link(nbr, v) <= star(nbr, w)


def is_sil(g, nbr, a, b):
    if b in nbr[a]:
        return False
    core = link(nbr, a) & link(nbr, b)
    rest = set(range(g.n)) - core
    return any(a not in comp and b not in comp for comp in components(rest, nbr))


def is_separated_sil(g, nbr, a, b):
    if not is_sil(g, nbr, a, b):
        return False
    rest = set(range(g.n)) - (link(nbr, a) & link(nbr, b))
    comps = components(rest, nbr)
    comp_a = next(c for c in comps if a in c)
    return b not in comp_a


def classify(g, nbr, a, b):
    """(dominating_a, dominating_b, subordinate_a, subordinate_b, shared)."""
    assert b not in nbr[a]
    all_vs = set(range(g.n))
    comps_a = components(all_vs - star(nbr, a), nbr)
    comps_b = components(all_vs - star(nbr, b), nbr)
    shared = comps_a & comps_b
    dom_a = next(c for c in comps_a if b in c)
    dom_b = next(c for c in comps_b if a in c)
    sub_a = comps_a - shared - {dom_a}
    sub_b = comps_b - shared - {dom_b}
    return dom_a, dom_b, sub_a, sub_b, shared


def vhat_classes(g, nbr, v):
    """Reachability classes over edges not inside the closed star of v."""
    stv = star(nbr, v)
    filtered = {i: set() for i in range(g.n)}
    for i, j in g.edges():
        if i in stv and j in stv:
            continue
        filtered[i].add(j)
        filtered[j].add(i)
    return components(set(range(g.n)), filtered)


def star_complement_comps(g, nbr, v):
    return components(set(range(g.n)) - star(nbr, v), nbr)
