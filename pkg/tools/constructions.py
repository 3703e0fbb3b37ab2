"""
Named graph families: cycles, paths, cliques, complete bipartite graphs, the
hexagon-plus-triangle gadget, and (generalized) Mycielski graphs.

Mycielski layout: originals 0..n-1, shadow of i at n+i, apex at 2n.

Author: Graph Invariants Team
Date: 2026-10-19
"""

from typing import Literal

from .errors import MalformedInput, SizeCapExceeded
from .graph_core import MAX_VERTICES, Graph, build_graph

Family = Literal["cycle", "path", "complete", "complete_bipartite", "edgeless"]

FAMILIES = ("cycle", "path", "complete", "complete_bipartite", "edgeless")


def _positive(name: str, value: int, least: int = 1) -> int:
    if not isinstance(value, int) or value < least:
        raise MalformedInput(f"{name} must be an integer >= {least}, got {value!r}")
    return value


def basic_graph(family: Family, *params: int) -> Graph:
    """
    Standard labeled members of the basic families.

    cycle(n >= 3): i ~ i+1 mod n. path(n >= 1): i ~ i+1. complete(n),
    edgeless(n): n >= 0. complete_bipartite(a, b): sides 0..a-1 and a..a+b-1.
    """
    if family == "complete_bipartite":
        if len(params) != 2:
            raise MalformedInput("complete_bipartite takes two part sizes")
        a = _positive("first part size", params[0])
        b = _positive("second part size", params[1])
        return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if len(params) != 1:
        raise MalformedInput(f"{family} takes one size parameter")
    n = params[0]
    if family == "cycle":
        _positive("cycle length", n, 3)
        return build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "path":
        _positive("path order", n)
        return build_graph(n, [(i, i + 1) for i in range(n - 1)])
    if family == "complete":
        _positive("clique order", n, 0)
        return build_graph(n, [(i, j) for j in range(n) for i in range(j)])
    if family == "edgeless":
        _positive("vertex count", n, 0)
        return build_graph(n, [])
    raise MalformedInput(f"unknown graph family {family!r}")


def mycielski(g: Graph) -> Graph:
    """
    mu(g) on 2n+1 vertices with 3|E| + n edges.

    Shadow n+i is adjacent to the base neighbours of i; the apex 2n is
    adjacent to every shadow.
    """
    if g.n < 1:
        raise MalformedInput("Mycielski construction needs at least one vertex")
    size = 2 * g.n + 1
    if size > MAX_VERTICES:
        raise SizeCapExceeded("Mycielski graph", size, MAX_VERTICES)
    n = g.n
    edges = []
    for u, v in g.edges():
        edges.extend([(u, v), (u, n + v), (v, n + u)])
    edges.extend((n + i, 2 * n) for i in range(n))
    return build_graph(size, edges)


def generalized_mycielski(k: int, ell: int) -> Graph:
    """M'_{k,ell}: k-2 Mycielski steps applied to the cycle of length 2 ell + 1."""
    _positive("k", k, 2)
    _positive("ell", ell, 2)
    size = (ell + 1) * 2 ** (k - 1) - 1
    if size > MAX_VERTICES:
        raise SizeCapExceeded(f"M'_({k},{ell})", size, MAX_VERTICES)
    g = basic_graph("cycle", 2 * ell + 1)
    for _ in range(k - 2):
        g = mycielski(g)
    return g


def mycielski_iterated(k: int) -> Graph:
    """M_k: M_2 = C5, M_k = mu(M_{k-1}); 3 * 2^(k-1) - 1 vertices."""
    return generalized_mycielski(k, 2)


def fig1_gadget() -> Graph:
    """
    Hexagon v1..v6 plus the triangle v1 v3 v5.

    The triangle comes first: v1, v3, v5 are 0, 1, 2 and v2, v4, v6 are
    3, 4, 5.
    """
    hexagon = [(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]
    triangle = [(0, 1), (1, 2), (0, 2)]
    return build_graph(6, hexagon + triangle)
