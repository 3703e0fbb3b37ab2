"""
Executable steps of the minimal-counterexample argument.

Three reductions (even-cycle contraction, diamond reduction, apex
replacement) each return the reduced graph and a ReductionTrace; two
colouring extensions rebuild a colouring of G from a colouring of G - K or
G - C; Hajnal's common-vertex lemma is run constructively by edge deletion.
The audit evaluates the inequalities of the argument on an ordinary graph and
reports them without asserting anything.

Author: Graph Invariants Team
Date: 2026-10-19
"""

from dataclasses import dataclass, field
from typing import Dict, List, Literal, Optional, Sequence, Tuple, Union

from .errors import PreconditionViolated, SizeCapExceeded
from .exact_solvers import (
    ColoringCertificate,
    SolverBudget,
    all_induced_even_cycles,
    all_maximum_independent_sets,
    chromatic_number,
    chromatic_numbers_all_subsets,
    find_diamond,
    independence_number,
    is_proper_coloring,
    shortest_cycle,
)
from .folkman_invariants import PotentialWitness, folkman_number
from .graph_core import (
    Graph,
    VertexSet,
    add_vertex_with_neighborhood,
    delete_edge,
    induced_subgraph,
    is_clique,
    members,
    merge_vertices,
    vertex_set,
)

ReductionKind = Literal["even_cycle_contraction", "diamond_reduction", "apex_replacement"]
Colors = Union[ColoringCertificate, Sequence[int]]

AUDIT_CAP = 12


@dataclass(frozen=True)
class ReductionTrace:
    """
    How a reduced graph was obtained from its source.

    Attributes:
        kind: which reduction ran
        removed: source vertices deleted outright
        merged: source vertex sets collapsed into one vertex each
        mapping: source vertex -> reduced vertex, total on surviving vertices
        params: reduction-specific data (cycle, a, b / x, y, u, v, w / x, y, A, z)
    """
    kind: ReductionKind
    removed: VertexSet
    merged: Tuple[VertexSet, ...]
    mapping: Dict[int, int]
    params: Dict[str, object] = field(default_factory=dict)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise PreconditionViolated(message)


def _check_vertices(g: Graph, *vertices: int) -> None:
    for v in vertices:
        _require(0 <= v < g.n, f"vertex {v} outside 0..{g.n - 1}")
    _require(len(set(vertices)) == len(vertices), f"vertices {vertices} are not distinct")


def _check_cycle(g: Graph, cycle: Sequence[int]) -> None:
    _check_vertices(g, *cycle)
    _require(len(cycle) >= 3, "a cycle needs at least three vertices")
    for i, v in enumerate(cycle):
        w = cycle[(i + 1) % len(cycle)]
        _require(g.has_edge(v, w), f"{v} and {w} are consecutive on the cycle but not adjacent")


def _is_induced_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    sub, _ = induced_subgraph(g, vertex_set(cycle))
    return sub.edge_count() == len(cycle)


def even_cycle_contraction(g: Graph, cycle: Sequence[int]) -> Tuple[Graph, ReductionTrace]:
    """Merge the two colour classes of an induced even cycle into a and b."""
    _check_cycle(g, cycle)
    _require(len(cycle) % 2 == 0 and len(cycle) >= 4, f"cycle of length {len(cycle)} is not even")
    _require(_is_induced_cycle(g, cycle), "cycle has a chord")
    part_a = vertex_set(cycle[0::2])
    part_b = vertex_set(cycle[1::2])
    reduced, mapping = merge_vertices(g, [part_a, part_b])
    params = {"cycle": list(cycle), "a": mapping[cycle[0]], "b": mapping[cycle[1]]}
    return reduced, ReductionTrace("even_cycle_contraction", 0, (part_a, part_b), mapping, params)


def _delete_pair(g: Graph, x: int, y: int) -> Tuple[Graph, Dict[int, int]]:
    return induced_subgraph(g, g.full_mask & ~(1 << x) & ~(1 << y))


def diamond_reduction(g: Graph, x: int, y: int, u: int, v: int) -> Tuple[Graph, ReductionTrace]:
    """G_uv: delete x and y, then merge u and v into w."""
    _check_vertices(g, x, y, u, v)
    _require(g.has_edge(x, y), f"({x}, {y}) is not an edge")
    for a in (u, v):
        _require(g.has_edge(a, x) and g.has_edge(a, y), f"{a} is not a common neighbour of {x} and {y}")
    _require(not g.has_edge(u, v), f"{u} and {v} are adjacent")
    rest, first = _delete_pair(g, x, y)
    reduced, second = merge_vertices(rest, [(1 << first[u]) | (1 << first[v])])
    mapping = {old: second[mid] for old, mid in first.items()}
    params = {"x": x, "y": y, "u": u, "v": v, "w": mapping[u]}
    return reduced, ReductionTrace("diamond_reduction", (1 << x) | (1 << y), ((1 << u) | (1 << v),), mapping, params)


def apex_replacement(g: Graph, x: int, y: int) -> Tuple[Graph, ReductionTrace]:
    """G': delete x and y and add z adjacent to their common neighbourhood A."""
    _check_vertices(g, x, y)
    _require(g.has_edge(x, y), f"({x}, {y}) is not an edge")
    common = g.adj[x] & g.adj[y]
    rest, mapping = _delete_pair(g, x, y)
    reduced = add_vertex_with_neighborhood(rest, vertex_set(mapping[a] for a in members(common)))
    params = {"x": x, "y": y, "A": members(common), "z": rest.n}
    return reduced, ReductionTrace("apex_replacement", (1 << x) | (1 << y), (), mapping, params)


# ---------------------------------------------------------------------------
# Colouring extensions and lifts
# ---------------------------------------------------------------------------

def _colors_of(phi: Colors) -> List[int]:
    return list(phi.colors) if isinstance(phi, ColoringCertificate) else list(phi)


def _check_base_coloring(base: Graph, colors: List[int]) -> None:
    _require(len(colors) == base.n, f"colouring has {len(colors)} entries for {base.n} vertices")
    _require(is_proper_coloring(base, colors), "colouring of the remaining graph is not proper")


def _check_attachment(g: Graph, core: Sequence[int], attached: List[VertexSet]) -> None:
    for i, first in enumerate(attached):
        for j in range(i + 1, len(attached)):
            second = attached[j]
            _require(not first & second, f"neighbourhoods of {core[i]} and {core[j]} overlap")
            for w in members(first):
                _require(not g.adj[w] & second, f"neighbourhoods of {core[i]} and {core[j]} are adjacent")


def _extend(g: Graph, core: Sequence[int], core_colors: Sequence[int], phi: Colors) -> ColoringCertificate:
    core_mask = vertex_set(core)
    base, to_base = induced_subgraph(g, g.full_mask & ~core_mask)
    colors = _colors_of(phi)
    _check_base_coloring(base, colors)
    attached = [g.adj[v] & ~core_mask for v in core]
    _check_attachment(g, core, attached)

    fresh = max(colors, default=0) + 1
    result = [0] * g.n
    for old, new in to_base.items():
        result[old] = colors[new]
    for v, c, nbrs in zip(core, core_colors, attached):
        result[v] = c
        for w in members(nbrs):
            if result[w] == c:
                result[w] = fresh
    if not is_proper_coloring(g, result):
        raise AssertionError("extension produced an improper colouring")
    return ColoringCertificate.of(result)


def extend_coloring_over_clique(g: Graph, clique: Sequence[int], phi: Colors) -> ColoringCertificate:
    """
    Colour u_i with i and move conflicting neighbours of u_i to a fresh colour.

    phi colours G - K in the compacted vertex order of induced_subgraph.
    """
    _check_vertices(g, *clique)
    _require(len(clique) >= 1, "clique is empty")
    _require(is_clique(g, vertex_set(clique)), f"{list(clique)} is not a clique")
    return _extend(g, clique, range(1, len(clique) + 1), phi)


def extend_coloring_over_odd_cycle(g: Graph, cycle: Sequence[int], phi: Colors) -> ColoringCertificate:
    """
    Colour v_1, v_2, ... of a shortest odd cycle 2, 1, 2, 1, ... and the last
    vertex 3; conflicting outside neighbours move to a fresh colour.
    """
    _check_cycle(g, cycle)
    length = len(cycle)
    _require(length % 2 == 1 and length >= 5, f"cycle of length {length} is not odd of length >= 5")
    shortest = shortest_cycle(g)
    _require(shortest is not None and shortest[1] == length, "cycle is not a shortest cycle")
    on_cycle = vertex_set(cycle)
    for w in members(g.full_mask & ~on_cycle):
        _require((g.adj[w] & on_cycle).bit_count() <= 1, f"vertex {w} has several neighbours on the cycle")
    core_colors = [2 if i % 2 == 0 else 1 for i in range(length - 1)] + [3]
    return _extend(g, cycle, core_colors, phi)


def lift_coloring_through_merge(g: Graph, trace: ReductionTrace, phi: Colors) -> ColoringCertificate:
    """Pull a colouring of an even-cycle contraction back along the vertex map."""
    _require(trace.kind == "even_cycle_contraction", f"cannot lift through {trace.kind}")
    colors = _colors_of(phi)
    lifted = [colors[trace.mapping[v]] for v in range(g.n)]
    _require(is_proper_coloring(g, lifted), "colouring does not lift to a proper colouring")
    return ColoringCertificate.of(lifted)


def lift_coloring_through_diamond(g: Graph, trace: ReductionTrace, phi: Colors) -> ColoringCertificate:
    """u and v take the colour of w; x and y take two fresh colours."""
    _require(trace.kind == "diamond_reduction", f"cannot lift through {trace.kind}")
    colors = _colors_of(phi)
    top = max(colors, default=0)
    lifted = [0] * g.n
    for old, new in trace.mapping.items():
        lifted[old] = colors[new]
    lifted[trace.params["x"]] = top + 1
    lifted[trace.params["y"]] = top + 2
    _require(is_proper_coloring(g, lifted), "colouring does not lift to a proper colouring")
    return ColoringCertificate.of(lifted)


# ---------------------------------------------------------------------------
# Hajnal's lemma
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HajnalResult:
    """
    Attributes:
        vertex: a vertex in every maximum independent set
        common: intersection of all maximum independent sets
        constructive: whether the edge-deletion recursion produced vertex
    """
    vertex: int
    common: VertexSet
    constructive: bool


def _edge_deletion_vertex(g: Graph) -> Optional[int]:
    h = g
    alpha, _ = independence_number(g)
    while True:
        isolated = [v for v in range(h.n) if not h.adj[v]]
        if isolated:
            return isolated[0]
        for u, v in h.edges():
            thinner = delete_edge(h, u, v)
            if independence_number(thinner)[0] == alpha:
                h = thinner
                break
        else:
            return None


def hajnal_common_vertex(g: Graph) -> HajnalResult:
    """
    A vertex in every maximum independent set of a graph with alpha > n/2.

    Edges whose deletion keeps alpha are removed one at a time (first such
    edge in sorted order) until a vertex is isolated. The answer is checked
    against the intersection of all maximum independent sets, which is also
    the fallback.
    """
    alpha, _ = independence_number(g)
    _require(2 * alpha > g.n, f"alpha = {alpha} is not above n/2 = {g.n}/2")
    everything = all_maximum_independent_sets(g)
    common = g.full_mask
    for s in everything:
        common &= s
    vertex = _edge_deletion_vertex(g)
    if vertex is not None and common >> vertex & 1:
        return HajnalResult(vertex, common, True)
    if not common:
        raise AssertionError("maximum independent sets have empty intersection")
    return HajnalResult(min(members(common)), common, False)


# ---------------------------------------------------------------------------
# Inequality audit
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EvenCycleChain:
    """Quantities of the even-cycle step for one induced even cycle."""
    cycle: List[int]
    p: int
    rho_h_prime: int
    rho_h: int
    cycle_length: int
    alpha_gap: int
    gap_within_p_minus_one: bool


@dataclass(frozen=True)
class DiamondMeasurement:
    x: int
    y: int
    u: int
    v: int
    chi_reduced: int
    chi_minus_two: int


@dataclass(frozen=True)
class ApexMeasurement:
    x: int
    y: int
    common: List[int]
    chi_apex: int
    f_apex: int


@dataclass(frozen=True)
class InequalityAudit:
    chi: int
    f: int
    subset_bound_holds: bool
    subset_bound_violation: Optional[VertexSet]
    even_cycles: List[EvenCycleChain]
    diamond_free: bool
    even_hole_free: bool
    diamonds: List[DiamondMeasurement]
    apexes: List[ApexMeasurement]


def _even_cycle_chain(g: Graph, cycle: List[int]) -> EvenCycleChain:
    reduced, trace = even_cycle_contraction(g, cycle)
    _, witness = folkman_number(reduced)
    merged = (1 << trace.params["a"]) | (1 << trace.params["b"])
    on_cycle = vertex_set(cycle)
    kept = witness.subset & ~merged
    h_mask = on_cycle
    for v in members(g.full_mask & ~on_cycle):
        if kept >> trace.mapping[v] & 1:
            h_mask |= 1 << v
    h = PotentialWitness.of(g, h_mask)
    p = len(cycle) // 2
    gap = h.alpha - witness.alpha
    return EvenCycleChain(cycle, p, witness.rho, h.rho, len(cycle), gap, gap <= p - 1)


def audit_proof_inequalities(g: Graph, budget: Optional[SolverBudget] = None) -> InequalityAudit:
    """
    Evaluate the steps of the argument on g.

    Reports the subset bound chi(G) >= chi(G[X]) + chi(G - X) - 1 over every
    X, the even-cycle chain for each induced even cycle, chi(G_uv) next to
    chi(G) - 2 for each diamond configuration, and chi, f of the apex graph
    for each edge whose common neighbourhood is not a clique.
    """
    if g.n > AUDIT_CAP:
        raise SizeCapExceeded("audit_proof_inequalities", g.n, AUDIT_CAP)
    chi_table = chromatic_numbers_all_subsets(g)
    full = g.full_mask
    chi = chi_table[full]
    violation = None
    for x in range(full + 1):
        if chi_table[x] + chi_table[full ^ x] - 1 > chi:
            violation = x
            break
    f, _ = folkman_number(g)

    cycles = all_induced_even_cycles(g)
    chains = [_even_cycle_chain(g, c) for c in cycles]

    diamonds: List[DiamondMeasurement] = []
    apexes: List[ApexMeasurement] = []
    for x, y in g.edges():
        common = g.adj[x] & g.adj[y]
        if is_clique(g, common):
            continue
        for i, u in enumerate(members(common)):
            for v in members(common)[i + 1:]:
                if g.has_edge(u, v):
                    continue
                reduced, _ = diamond_reduction(g, x, y, u, v)
                diamonds.append(DiamondMeasurement(x, y, u, v, chromatic_number(reduced, budget)[0], chi - 2))
        apex, _ = apex_replacement(g, x, y)
        apexes.append(ApexMeasurement(x, y, members(common), chromatic_number(apex, budget)[0], folkman_number(apex)[0]))

    diamond = find_diamond(g)
    return InequalityAudit(
        chi=chi,
        f=f,
        subset_bound_holds=violation is None,
        subset_bound_violation=violation,
        even_cycles=chains,
        diamond_free=diamond is None or not diamond.induced,
        even_hole_free=not cycles,
        diamonds=diamonds,
        apexes=apexes,
    )
