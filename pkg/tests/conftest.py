"""Shared fixtures and brute-force oracles for the workbench tests."""

import random
from functools import lru_cache
from typing import Dict, List

import networkx as nx
import pytest

from tools.constructions import basic_graph, fig1_gadget, mycielski_iterated
from tools.graph_core import Graph, build_graph


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def from_nx(G: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(G.nodes()))}
    return build_graph(len(index), [(index[u], index[v]) for u, v in G.edges()])


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_graphs(seed: int, count: int, n_max: int) -> List[Graph]:
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(0, n_max), rng.choice((0.2, 0.35, 0.5, 0.7))) for _ in range(count)]


def brute_alpha_table(g: Graph) -> List[int]:
    """alpha(G[S]) for every mask by deleting one vertex at a time."""
    size = 1 << g.n
    independent = [True] * size
    table = [0] * size
    for s in range(1, size):
        vs = [v for v in range(g.n) if s >> v & 1]
        independent[s] = all(not g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])
        table[s] = len(vs) if independent[s] else max(table[s & ~(1 << v)] for v in vs)
    return table


def brute_alpha(g: Graph) -> int:
    if g.n == 0:
        return 0
    return max(len(c) for c in nx.find_cliques(nx.complement(to_nx(g))))


def brute_chi(g: Graph) -> int:
    """Set cover of V by maximal independent sets, memoised on the uncovered mask."""
    if g.n == 0:
        return 0
    independents = [sum(1 << v for v in c) for c in nx.find_cliques(nx.complement(to_nx(g)))]

    @lru_cache(maxsize=None)
    def cover(mask: int) -> int:
        if not mask:
            return 0
        low = mask & -mask
        return 1 + min(cover(mask & ~s) for s in independents if s & low)

    return cover(g.full_mask)


def brute_f(g: Graph) -> int:
    table = brute_alpha_table(g)
    return max(s.bit_count() - 2 * a + 2 for s, a in enumerate(table))


@pytest.fixture
def c5() -> Graph:
    return basic_graph("cycle", 5)


@pytest.fixture
def gadget() -> Graph:
    return fig1_gadget()


@pytest.fixture
def grotzsch() -> Graph:
    return mycielski_iterated(3)


@pytest.fixture
def diamond() -> Graph:
    # x=0, y=1 adjacent; u=2, v=3 common neighbours, non-adjacent
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


@pytest.fixture
def two_triangles() -> Graph:
    return build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


@pytest.fixture
def small_graphs() -> Dict[str, Graph]:
    return {
        "C5": basic_graph("cycle", 5),
        "C6": basic_graph("cycle", 6),
        "K4": basic_graph("complete", 4),
        "K23": basic_graph("complete_bipartite", 2, 3),
        "P4": basic_graph("path", 4),
        "E3": basic_graph("edgeless", 3),
        "gadget": fig1_gadget(),
    }
