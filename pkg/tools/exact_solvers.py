"""
Exact solvers for the NP-hard invariants the workbench needs.

Independence number (branch and bound on bit masks with a clique-cover
bound), clique number, k-colourability and chromatic number (backtracking
with forward checking and colour-symmetry breaking), shortest cycles,
induced even cycles, diamonds and odd cycle transversals. Every answer comes
with a certificate; running out of budget raises BudgetExceeded instead of
returning a partial answer.

Author: Graph Invariants Team
Date: 2026-10-19
"""

import time
from collections import deque
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import BudgetExceeded, PreconditionViolated, SizeCapExceeded
from .graph_core import (
    Graph,
    VertexSet,
    complement,
    is_bipartite,
    lowest,
    masks_of_size,
    members,
)

ALL_MIS_CAP = 20
SUBSET_TABLE_CAP = 24
CHI_TABLE_CAP = 14
INDUCED_CYCLE_CAP = 24


@dataclass(frozen=True)
class SolverBudget:
    """Node and wall-time limits for one solver call; None means unbounded."""
    node_limit: Optional[int] = None
    time_limit_ms: Optional[int] = None

    def __post_init__(self):
        if self.node_limit is not None and self.node_limit < 0:
            raise ValueError("node_limit must be non-negative")
        if self.time_limit_ms is not None and self.time_limit_ms < 0:
            raise ValueError("time_limit_ms must be non-negative")


UNBOUNDED = SolverBudget()


class _Meter:
    """Counts search nodes against a SolverBudget."""

    def __init__(self, budget: Optional[SolverBudget], what: str):
        budget = budget or UNBOUNDED
        self.what = what
        self.node_limit = budget.node_limit
        self.deadline = None
        if budget.time_limit_ms is not None:
            self.deadline = time.monotonic() + budget.time_limit_ms / 1000.0
        self.nodes = 0

    def tick(self, best_bound=None, bounds=None) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise BudgetExceeded(f"{self.what}: node limit {self.node_limit} reached", best_bound, bounds)
        if self.deadline is not None and self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded(f"{self.what}: time limit reached", best_bound, bounds)


def _meter_for(budget: Union[SolverBudget, _Meter, None], what: str) -> _Meter:
    """A fresh meter for a budget, or the caller's meter when one is passed through."""
    if isinstance(budget, _Meter):
        return budget
    return _Meter(budget, what)


@dataclass(frozen=True)
class ColoringCertificate:
    """
    Proper colouring with colours 1..k, every colour used.

    Attributes:
        colors: colour of each vertex
        k: number of colours
    """
    colors: Tuple[int, ...]
    k: int

    @classmethod
    def of(cls, colors: Sequence[int]) -> "ColoringCertificate":
        """Renumber the colours in use to 1..k, keeping their relative order."""
        used = sorted(set(colors))
        rank = {c: i + 1 for i, c in enumerate(used)}
        return cls(tuple(rank[c] for c in colors), len(used))


def is_proper_coloring(g: Graph, colors: Sequence[int]) -> bool:
    """Edge scan: every vertex coloured with a positive colour, no monochromatic edge."""
    if len(colors) != g.n or any(c < 1 for c in colors):
        return False
    return all(colors[u] != colors[v] for u, v in g.edges())


# ---------------------------------------------------------------------------
# Independence and clique numbers
# ---------------------------------------------------------------------------

def _clique_cover_size(adj: Sequence[int], mask: VertexSet) -> int:
    """Greedy clique cover of G[mask]; an upper bound on its independence number."""
    count = 0
    while mask:
        v = lowest(mask)
        clique = 1 << v
        cand = mask & adj[v]
        while cand:
            u = lowest(cand)
            clique |= 1 << u
            cand &= adj[u]
        mask &= ~clique
        count += 1
    return count


def _greedy_independent_set(adj: Sequence[int], mask: VertexSet) -> VertexSet:
    chosen = 0
    while mask:
        v = min(members(mask), key=lambda u: ((adj[u] & mask).bit_count(), u))
        chosen |= 1 << v
        mask &= ~adj[v] & ~(1 << v)
    return chosen


def independence_number(g: Graph, budget: Optional[SolverBudget] = None) -> Tuple[int, VertexSet]:
    """
    Maximum independent set by branch and bound.

    Branches on a maximum-degree vertex (exclude, or include and drop its
    closed neighbourhood) and prunes with a greedy clique cover.

    Returns:
        (alpha, witness mask)
    """
    adj = g.adj
    meter = _meter_for(budget, "independence_number")
    seed = _greedy_independent_set(adj, g.full_mask)
    best = [seed.bit_count(), seed]
    upper = _clique_cover_size(adj, g.full_mask)

    def search(mask: int, chosen: int, size: int) -> None:
        meter.tick(best[0], (best[0], upper))
        isolated = 0
        for v in members(mask):
            if not adj[v] & mask:
                isolated |= 1 << v
        if isolated:
            chosen |= isolated
            size += isolated.bit_count()
            mask &= ~isolated
        if not mask:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        if size + _clique_cover_size(adj, mask) <= best[0]:
            return
        v = max(members(mask), key=lambda u: ((adj[u] & mask).bit_count(), -u))
        search(mask & ~adj[v] & ~(1 << v), chosen | (1 << v), size + 1)
        search(mask & ~(1 << v), chosen, size)

    if best[0] < upper:
        search(g.full_mask, 0, 0)
    return best[0], best[1]


def all_maximum_independent_sets(g: Graph, cap: int = ALL_MIS_CAP) -> List[VertexSet]:
    """Every independent set of size alpha(g), sorted by mask value."""
    if g.n > cap:
        raise SizeCapExceeded("all_maximum_independent_sets", g.n, cap)
    alpha, _ = independence_number(g)
    adj = g.adj
    found: List[int] = []

    def extend(cand: int, chosen: int, size: int) -> None:
        if size == alpha:
            found.append(chosen)
            return
        if size + _clique_cover_size(adj, cand) < alpha:
            return
        while cand:
            v = lowest(cand)
            cand &= ~(1 << v)
            extend(cand & ~adj[v], chosen | (1 << v), size + 1)
            if size + _clique_cover_size(adj, cand) < alpha:
                return

    extend(g.full_mask, 0, 0)
    return sorted(found)


def subset_popcounts(n: int) -> np.ndarray:
    """popcount of every mask below 2^n."""
    counts = np.zeros(1 << n, dtype=np.int8)
    for b in range(n):
        counts[1 << b: 1 << (b + 1)] = counts[: 1 << b] + 1
    return counts


def independence_numbers_all_subsets(g: Graph, cap: int = SUBSET_TABLE_CAP) -> np.ndarray:
    """
    alpha(G[S]) for every S, indexed by mask.

    Filled block by block with the highest vertex b of S as pivot:
    alpha(S) = max(alpha(S - b), 1 + alpha(S - N[b])).
    """
    if g.n > cap:
        raise SizeCapExceeded("independence_numbers_all_subsets", g.n, cap)
    alpha = np.zeros(1 << g.n, dtype=np.int8)
    for b in range(g.n):
        low = (1 << b) - 1
        keep = np.int64(low & ~g.adj[b])
        rest = np.arange(1 << b, dtype=np.int64) & keep
        alpha[1 << b: 1 << (b + 1)] = np.maximum(alpha[: 1 << b], alpha[rest] + 1)
    return alpha


def clique_number(g: Graph, budget: Optional[SolverBudget] = None) -> Tuple[int, VertexSet]:
    """Maximum clique as a maximum independent set of the complement."""
    return independence_number(complement(g), budget)


# ---------------------------------------------------------------------------
# Colouring
# ---------------------------------------------------------------------------

def _coloring_order(g: Graph) -> List[int]:
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def is_k_colorable(g: Graph, k: int, budget: Optional[SolverBudget] = None) -> Optional[ColoringCertificate]:
    """
    Decide k-colourability by backtracking.

    Vertices are coloured in descending-degree order (ties by index); a
    vertex may only open the next unused colour, which also keeps the i-th
    vertex within colours 1..i+1. After each assignment every uncoloured
    neighbour must keep at least one available colour.

    Returns:
        a certificate, or None when no proper k-colouring exists
    """
    if k < 0:
        raise PreconditionViolated(f"k must be non-negative, got {k}")
    n = g.n
    if n == 0:
        return ColoringCertificate((), 0)
    if k == 0:
        return None
    adj = g.adj
    order = _coloring_order(g)
    colors = [0] * n
    palette = ((1 << (k + 1)) - 1) & ~1
    meter = _meter_for(budget, f"is_k_colorable(k={k})")

    def blocked(v: int) -> int:
        mask = 0
        for u in members(adj[v]):
            if colors[u]:
                mask |= 1 << colors[u]
        return mask

    def assign(i: int, used: int) -> bool:
        if i == n:
            return True
        meter.tick()
        v = order[i]
        taken = blocked(v)
        for c in range(1, min(used + 1, k) + 1):
            if taken >> c & 1:
                continue
            colors[v] = c
            alive = True
            for w in members(adj[v]):
                if not colors[w] and blocked(w) & palette == palette:
                    alive = False
                    break
            if alive and assign(i + 1, max(used, c)):
                return True
            colors[v] = 0
        return False

    if assign(0, 0):
        return ColoringCertificate.of(colors)
    return None


def _greedy_coloring(g: Graph) -> List[int]:
    colors = [0] * g.n
    for v in _coloring_order(g):
        taken = {colors[u] for u in members(g.adj[v])}
        c = 1
        while c in taken:
            c += 1
        colors[v] = c
    return colors


def chromatic_number(g: Graph, budget: Optional[SolverBudget] = None) -> Tuple[int, ColoringCertificate]:
    """
    Smallest k with a proper k-colouring.

    The search starts at the clique number and increases k; a greedy
    colouring supplies the upper end of the bracket. One meter covers the
    clique search and every k, so the budget bounds the whole call.

    Raises:
        BudgetExceeded: with bounds=(lower, upper) proven so far
    """
    if g.n == 0:
        return 0, ColoringCertificate((), 0)
    upper_cert = ColoringCertificate.of(_greedy_coloring(g))
    meter = _meter_for(budget, "chromatic_number")
    lower = 1
    try:
        lower, _ = clique_number(g, meter)
        for k in range(lower, upper_cert.k):
            cert = is_k_colorable(g, k, meter)
            if cert is not None:
                return k, cert
            lower = k + 1
    except BudgetExceeded as e:
        raise BudgetExceeded(str(e), upper_cert.k, (lower, upper_cert.k)) from None
    return upper_cert.k, upper_cert


def chromatic_numbers_all_subsets(g: Graph, cap: int = CHI_TABLE_CAP) -> List[int]:
    """
    chi(G[S]) for every S, indexed by mask.

    chi(S) = 1 + min chi(S - I) over independent I containing the lowest
    vertex of S.
    """
    if g.n > cap:
        raise SizeCapExceeded("chromatic_numbers_all_subsets", g.n, cap)
    adj = g.adj
    size = 1 << g.n
    independent = [True] * size
    for s in range(1, size):
        v = lowest(s)
        rest = s & ~(1 << v)
        independent[s] = independent[rest] and not adj[v] & rest
    chi = [0] * size
    for s in range(1, size):
        v = lowest(s)
        vbit = 1 << v
        avail = s & ~vbit & ~adj[v]
        best = g.n + 1
        sub = avail
        while True:
            part = sub | vbit
            if independent[part]:
                value = chi[s & ~part] + 1
                if value < best:
                    best = value
            if sub == 0:
                break
            sub = (sub - 1) & avail
        chi[s] = best
    return chi


# ---------------------------------------------------------------------------
# Cycles, diamonds, transversals
# ---------------------------------------------------------------------------

def shortest_cycle(g: Graph) -> Optional[Tuple[List[int], int]]:
    """
    A shortest cycle by BFS from every vertex.

    Returns:
        (cycle vertices in order starting at the BFS root, girth), or None
        for a forest
    """
    best_len = g.n + 1
    best_cycle: Optional[List[int]] = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best_len:
                break
            for w in g.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if length < best_len:
                        left, right = [], []
                        x = u
                        while x != -1:
                            left.append(x)
                            x = parent[x]
                        x = w
                        while x != root:
                            right.append(x)
                            x = parent[x]
                        best_len = length
                        best_cycle = list(reversed(left)) + right
    if best_cycle is None:
        return None
    return best_cycle, best_len


def _induced_cycles(g: Graph) -> Iterator[List[int]]:
    """Every chordless cycle once: starts at its least vertex, second vertex < last."""
    adj = g.adj
    for s in range(g.n):
        allowed = g.full_mask & ~((1 << (s + 1)) - 1)
        stack = [[s, p] for p in reversed(members(adj[s] & allowed))]
        while stack:
            path = stack.pop()
            last = path[-1]
            pathmask = 0
            for v in path:
                pathmask |= 1 << v
            inner = pathmask & ~(1 << s) & ~(1 << last)
            extensions = []
            for x in members(adj[last] & allowed & ~pathmask):
                if adj[x] & inner:
                    continue
                if adj[x] >> s & 1:
                    if x > path[1]:
                        yield path + [x]
                    continue
                extensions.append(path + [x])
            stack.extend(reversed(extensions))


def all_induced_even_cycles(g: Graph, cap: int = INDUCED_CYCLE_CAP) -> List[List[int]]:
    """Every induced even cycle of length >= 4, shortest first, then by sorted vertex tuple."""
    if g.n > cap:
        raise SizeCapExceeded("induced even cycle search", g.n, cap)
    cycles = [c for c in _induced_cycles(g) if len(c) % 2 == 0 and len(c) >= 4]
    cycles.sort(key=lambda c: (len(c), sorted(c)))
    return cycles


def find_induced_even_cycle(g: Graph, cap: int = INDUCED_CYCLE_CAP) -> Optional[List[int]]:
    cycles = all_induced_even_cycles(g, cap)
    return cycles[0] if cycles else None


@dataclass(frozen=True)
class DiamondMatch:
    """x, y adjacent with common neighbours u, v; induced iff uv is not an edge."""
    x: int
    y: int
    u: int
    v: int
    induced: bool


def find_diamond(g: Graph) -> Optional[DiamondMatch]:
    """
    Locate a diamond: an induced one if any exists, otherwise a K4 where the
    five diamond edges are present but uv is an edge too (induced=False).
    """
    fallback: Optional[DiamondMatch] = None
    for x, y in g.edges():
        common = members(g.adj[x] & g.adj[y])
        for i, u in enumerate(common):
            for v in common[i + 1:]:
                if not g.has_edge(u, v):
                    return DiamondMatch(x, y, u, v, True)
                if fallback is None:
                    fallback = DiamondMatch(x, y, u, v, False)
    return fallback


def odd_cycle_transversal(g: Graph, budget: Optional[SolverBudget] = None) -> Tuple[int, VertexSet]:
    """
    Minimum vertex set whose deletion leaves a bipartite graph.

    Iterative deepening on the deletion size; within a size, masks are tried
    in increasing order so the witness is the least one.
    """
    meter = _Meter(budget, "odd_cycle_transversal")
    full = g.full_mask
    for k in range(g.n + 1):
        for mask in masks_of_size(g.n, k):
            meter.tick(None, (k, g.n))
            if is_bipartite(g, full & ~mask):
                return k, mask
    raise AssertionError("deleting every vertex always leaves a bipartite graph")
