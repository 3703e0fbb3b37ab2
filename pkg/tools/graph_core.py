"""
Graph core for the Folkman workbench.

Immutable simple undirected graphs stored as per-vertex neighbour bit masks,
vertex sets as plain integer masks, and the primitives every other module is
built from: induced subgraphs, deletion, merging of independent sets, apex
insertion and exhaustive small-graph enumeration.

Author: Graph Invariants Team
Date: 2026-10-19
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import MalformedInput, PreconditionViolated, SizeCapExceeded

# A vertex subset as a bit mask over 0..n-1.
VertexSet = int

MAX_VERTICES = 32
DEDUP_ENUMERATION_CAP = 8
LABELED_ENUMERATION_CAP = 7


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    """Build a mask from an iterable of vertex indices."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> List[int]:
    """Vertex indices of a mask in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def lowest(mask: VertexSet) -> int:
    return (mask & -mask).bit_length() - 1


def next_same_size(mask: VertexSet) -> VertexSet:
    """Next larger integer with the same number of set bits (Gosper's hack)."""
    low = mask & -mask
    ripple = mask + low
    return ripple | (((ripple ^ mask) >> 2) // low)


def masks_of_size(n: int, k: int) -> Iterator[VertexSet]:
    """All k-subsets of range(n) as masks, in increasing mask order."""
    if k == 0:
        yield 0
        return
    if k > n:
        return
    mask = (1 << k) - 1
    limit = 1 << n
    while mask < limit:
        yield mask
        mask = next_same_size(mask)


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on vertices 0..n-1.

    Attributes:
        n: vertex count
        adj: adj[v] is the neighbour mask of v (symmetric, loop-free)
    """
    n: int
    adj: Tuple[int, ...]

    @property
    def full_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int, within: Optional[VertexSet] = None) -> int:
        row = self.adj[v] if within is None else self.adj[v] & within
        return row.bit_count()

    def neighbors(self, v: int) -> List[int]:
        return members(self.adj[v])

    def edges(self) -> List[Tuple[int, int]]:
        """Edges (u, v) with u < v, sorted."""
        out = []
        for u in range(self.n):
            for v in members(self.adj[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def _check_size(n: int, cap: int = MAX_VERTICES) -> None:
    if n < 0:
        raise MalformedInput(f"negative vertex count {n}")
    if n > cap:
        raise SizeCapExceeded("vertex count", n, cap)


def _check_mask(g: Graph, s: VertexSet, what: str = "vertex set") -> None:
    if s < 0 or s >> g.n:
        raise MalformedInput(f"{what} {s:#x} has vertices outside 0..{g.n - 1}")


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """
    Build a graph from an edge list.

    Duplicate edges collapse; self-loops and out-of-range endpoints are
    rejected with MalformedInput.
    """
    _check_size(n)
    rows = [0] * n
    for pair in edges:
        if len(pair) != 2:
            raise MalformedInput(f"edge {tuple(pair)} is not a vertex pair")
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise MalformedInput(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise MalformedInput(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def graph_from_rows(n: int, rows: Sequence[int]) -> Graph:
    """Build a graph from neighbour masks, validating symmetry and loops."""
    _check_size(n)
    if len(rows) != n:
        raise MalformedInput(f"expected {n} adjacency rows, got {len(rows)}")
    for v, row in enumerate(rows):
        if row < 0 or row >> n:
            raise MalformedInput(f"row {v} has bits at positions >= {n}")
        if row >> v & 1:
            raise MalformedInput(f"self-loop at vertex {v}")
        for u in members(row):
            if not rows[u] >> v & 1:
                raise MalformedInput(f"asymmetric adjacency between {u} and {v}")
    return Graph(n, tuple(rows))


def induced_subgraph(g: Graph, s: VertexSet) -> Tuple[Graph, Dict[int, int]]:
    """
    Subgraph induced by s, compacted to 0..|s|-1 in ascending order.

    Returns:
        (subgraph, old_to_new) where old_to_new maps each vertex of s
    """
    _check_mask(g, s)
    keep = members(s)
    old_to_new = {old: new for new, old in enumerate(keep)}
    rows = []
    for old in keep:
        row = 0
        for u in members(g.adj[old] & s):
            row |= 1 << old_to_new[u]
        rows.append(row)
    return Graph(len(keep), tuple(rows)), old_to_new


def delete_vertices(g: Graph, s: VertexSet) -> Graph:
    _check_mask(g, s)
    return induced_subgraph(g, g.full_mask & ~s)[0]


def is_independent(g: Graph, s: VertexSet) -> bool:
    for v in members(s):
        if g.adj[v] & s:
            return False
    return True


def is_clique(g: Graph, s: VertexSet) -> bool:
    for v in members(s):
        if (s & ~(1 << v)) & ~g.adj[v]:
            return False
    return True


def is_bipartite(g: Graph, s: Optional[VertexSet] = None) -> bool:
    """Whether G[s] (default: all of G) has no odd cycle; layered BFS on masks."""
    mask = g.full_mask if s is None else s
    remaining = mask
    while remaining:
        start = remaining & -remaining
        sides = [start, 0]
        seen = start
        frontier = start
        parity = 0
        while frontier:
            reach = 0
            for u in members(frontier):
                reach |= g.adj[u]
            reach &= mask
            if reach & sides[parity]:
                return False
            fresh = reach & ~seen
            parity ^= 1
            sides[parity] |= fresh
            seen |= fresh
            frontier = fresh
        remaining &= ~seen
    return True


def merge_vertices(g: Graph, parts: Sequence[VertexSet]) -> Tuple[Graph, Dict[int, int]]:
    """
    Merge each part into a single vertex, collapsing multi-edges.

    A merged vertex takes the smallest index of its part; survivors are
    compacted in ascending order of their original index.

    Returns:
        (merged graph, old_to_new) total on the vertices of g

    Raises:
        PreconditionViolated: parts overlap, are empty, or contain an edge
    """
    seen = 0
    for part in parts:
        _check_mask(g, part, "part")
        if part == 0:
            raise PreconditionViolated("merge part is empty")
        if part & seen:
            raise PreconditionViolated("merge parts are not pairwise disjoint")
        if not is_independent(g, part):
            raise PreconditionViolated(f"merge part {members(part)} contains adjacent vertices")
        seen |= part

    rep_of = list(range(g.n))
    for part in parts:
        rep = lowest(part)
        for v in members(part):
            rep_of[v] = rep
    survivors = [v for v in range(g.n) if rep_of[v] == v]
    new_index = {v: i for i, v in enumerate(survivors)}
    old_to_new = {v: new_index[rep_of[v]] for v in range(g.n)}

    rows = [0] * len(survivors)
    for u, v in g.edges():
        a, b = old_to_new[u], old_to_new[v]
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return Graph(len(survivors), tuple(rows)), old_to_new


def add_vertex_with_neighborhood(g: Graph, nbrs: VertexSet) -> Graph:
    """New graph with vertex n adjacent exactly to nbrs."""
    _check_mask(g, nbrs, "neighbourhood")
    _check_size(g.n + 1)
    rows = [row | ((nbrs >> v & 1) << g.n) for v, row in enumerate(g.adj)]
    rows.append(nbrs)
    return Graph(g.n + 1, tuple(rows))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise PreconditionViolated(f"({u}, {v}) is not an edge")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    _check_size(g.n + h.n)
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, tuple(rows))


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph whose vertex i is vertex order[i] of g."""
    position = {old: new for new, old in enumerate(order)}
    rows = []
    for old in order:
        row = 0
        for u in members(g.adj[old]):
            row |= 1 << position[u]
        rows.append(row)
    return Graph(g.n, tuple(rows))


# ---------------------------------------------------------------------------
# Canonical form and enumeration
# ---------------------------------------------------------------------------

def canonical_form(g: Graph) -> Tuple[Graph, int]:
    """
    Relabel g so its upper-triangle bit string is lexicographically least.

    The string is read column-major, x(0,1), x(0,2), x(1,2), x(0,3), ...,
    the order graph6 uses. Placing vertices one at a time fixes one column
    per step, so only candidates with the least next column are explored;
    twin vertices (N(u) - v == N(v) - u) are interchangeable and only one
    of them is branched on.

    Returns:
        (canonical graph, key) where key is the bit string as an integer
    """
    n = g.n
    if n <= 1:
        return g, 0
    adj = g.adj
    twins = [[(adj[u] & ~(1 << v)) == (adj[v] & ~(1 << u)) for v in range(n)] for u in range(n)]

    best: List[Optional[List[int]]] = [None]
    best_order: List[List[int]] = [[]]

    def search(order: List[int], prefix: List[int], colval: Dict[int, int]) -> None:
        depth = len(order)
        if depth == n:
            if best[0] is None or prefix < best[0]:
                best[0] = list(prefix)
                best_order[0] = list(order)
            return
        least = min(colval.values())
        if best[0] is not None:
            current = prefix + [least]
            if current > best[0][: depth + 1]:
                return
        chosen: List[int] = []
        for v in sorted(colval):
            if colval[v] != least:
                continue
            if any(twins[u][v] for u in chosen):
                continue
            chosen.append(v)
        for v in chosen:
            row = adj[v]
            nxt = {w: (c << 1) | (row >> w & 1) for w, c in colval.items() if w != v}
            order.append(v)
            prefix.append(least)
            search(order, prefix, nxt)
            order.pop()
            prefix.pop()

    search([], [], {v: 0 for v in range(n)})
    key = 0
    for j, column in enumerate(best[0]):
        key = (key << j) | column
    return relabel(g, best_order[0]), key


def _labeled_graph(n: int, code: int) -> Graph:
    rows = [0] * n
    t = 0
    for j in range(1, n):
        for i in range(j):
            if code >> t & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            t += 1
    return Graph(n, tuple(rows))


@lru_cache(maxsize=None)
def _isomorphism_classes(n: int) -> Tuple[Graph, ...]:
    if n == 0:
        return (Graph(0, ()),)
    found: Dict[int, Graph] = {}
    for parent in _isomorphism_classes(n - 1):
        for nbrs in range(1 << (n - 1)):
            child, key = canonical_form(add_vertex_with_neighborhood(parent, nbrs))
            if key not in found:
                found[key] = child
    return tuple(found[key] for key in sorted(found))


def enumerate_graphs(n: int, dedup: bool, cap: Optional[int] = None) -> Iterator[Graph]:
    """
    Stream every graph on n vertices.

    Args:
        n: vertex count
        dedup: one canonical representative per isomorphism class when True,
            all 2^(n(n-1)/2) labeled graphs otherwise
        cap: override the default cap (8 dedup, 7 labeled)

    Raises:
        SizeCapExceeded: n above the cap
    """
    if n < 0:
        raise MalformedInput(f"negative vertex count {n}")
    limit = cap if cap is not None else (DEDUP_ENUMERATION_CAP if dedup else LABELED_ENUMERATION_CAP)
    if n > limit:
        raise SizeCapExceeded("enumeration", n, limit)
    if dedup:
        yield from _isomorphism_classes(n)
        return
    for code in range(1 << (n * (n - 1) // 2)):
        yield _labeled_graph(n, code)
