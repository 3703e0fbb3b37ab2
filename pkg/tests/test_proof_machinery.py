import random

import pytest

from conftest import random_graph
from tools.constructions import basic_graph
from tools.errors import PreconditionViolated, SizeCapExceeded
from tools.exact_solvers import (
    ColoringCertificate,
    all_maximum_independent_sets,
    chromatic_number,
    chromatic_numbers_all_subsets,
    find_induced_even_cycle,
    is_proper_coloring,
)
from tools.graph_core import build_graph, delete_vertices, enumerate_graphs, members, vertex_set
from tools.proof_machinery import (
    apex_replacement,
    audit_proof_inequalities,
    diamond_reduction,
    even_cycle_contraction,
    extend_coloring_over_clique,
    extend_coloring_over_odd_cycle,
    hajnal_common_vertex,
    lift_coloring_through_diamond,
    lift_coloring_through_merge,
)


@pytest.fixture
def diamond_host():
    # diamond on 0..3 (x=0, y=1, u=2, v=3) with pendants 4 on u and 5 on v
    return build_graph(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5)])


@pytest.fixture
def pendant_triangle():
    # triangle u1 u2 u3 = 0 1 2; u3 - 3; u1 - 4, 5; u2 - 6, 7 with 6 - 7
    return build_graph(8, [(0, 1), (1, 2), (0, 2), (2, 3), (0, 4), (0, 5), (1, 6), (1, 7), (6, 7)])


@pytest.fixture
def pendant_c5():
    # C5 on 0..4 with a pendant i + 5 on every cycle vertex i
    return build_graph(10, [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)])


# ---------------------------------------------------------------------------
# reductions
# ---------------------------------------------------------------------------

def test_even_cycle_contraction_of_c6():
    c6 = basic_graph("cycle", 6)
    reduced, trace = even_cycle_contraction(c6, list(range(6)))
    assert reduced.n == 2 and reduced.edges() == [(0, 1)]
    assert trace.kind == "even_cycle_contraction"
    assert trace.params["a"] == 0 and trace.params["b"] == 1
    assert trace.merged == (0b010101, 0b101010)
    assert chromatic_number(reduced)[0] == chromatic_number(c6)[0]


def test_even_cycle_contraction_of_k23():
    reduced, trace = even_cycle_contraction(basic_graph("complete_bipartite", 2, 3), [0, 2, 1, 3])
    assert reduced.n == 3
    assert trace.mapping[0] == trace.mapping[1]
    assert trace.mapping[2] == trace.mapping[3]


def test_even_cycle_contraction_preconditions(c5):
    with pytest.raises(PreconditionViolated):
        even_cycle_contraction(c5, list(range(5)))
    chorded = build_graph(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)])
    with pytest.raises(PreconditionViolated):
        even_cycle_contraction(chorded, list(range(6)))
    with pytest.raises(PreconditionViolated):
        even_cycle_contraction(basic_graph("cycle", 6), [0, 2, 1, 3])


def test_even_cycle_lift_is_a_homomorphism():
    rng = random.Random(51)
    seen = 0
    while seen < 100:
        g = random_graph(rng, rng.randint(4, 10), 0.35)
        cycle = find_induced_even_cycle(g)
        if cycle is None:
            continue
        seen += 1
        reduced, trace = even_cycle_contraction(g, cycle)
        chi, cert = chromatic_number(reduced)
        lifted = lift_coloring_through_merge(g, trace, cert)
        assert is_proper_coloring(g, lifted.colors)
        assert chromatic_number(g)[0] <= chi


def test_lift_through_merge_of_c6():
    c6 = basic_graph("cycle", 6)
    reduced, trace = even_cycle_contraction(c6, list(range(6)))
    lifted = lift_coloring_through_merge(c6, trace, [1, 2])
    assert lifted.colors == (1, 2, 1, 2, 1, 2)


def test_diamond_reduction(diamond, diamond_host):
    reduced, trace = diamond_reduction(diamond, 0, 1, 2, 3)
    assert reduced.n == 1 and reduced.edge_count() == 0

    reduced, trace = diamond_reduction(diamond_host, 0, 1, 2, 3)
    assert reduced.n == 3 and reduced.edges() == [(0, 1), (0, 2)]
    assert trace.mapping == {2: 0, 3: 0, 4: 1, 5: 2}
    assert trace.params["w"] == 0
    assert trace.removed == 0b11


def test_diamond_reduction_preconditions(diamond):
    k4 = basic_graph("complete", 4)
    with pytest.raises(PreconditionViolated):
        diamond_reduction(k4, 0, 1, 2, 3)
    with pytest.raises(PreconditionViolated):
        diamond_reduction(diamond, 2, 3, 0, 1)
    with pytest.raises(PreconditionViolated):
        diamond_reduction(diamond, 0, 1, 2, 2)


def test_lift_through_diamond(diamond_host):
    reduced, trace = diamond_reduction(diamond_host, 0, 1, 2, 3)
    chi, cert = chromatic_number(reduced)
    lifted = lift_coloring_through_diamond(diamond_host, trace, cert)
    assert is_proper_coloring(diamond_host, lifted.colors)
    assert lifted.k <= chi + 2
    assert lifted.colors[2] == lifted.colors[3]


def _diamonds(g):
    for x, y in g.edges():
        common = members(g.adj[x] & g.adj[y])
        for i, u in enumerate(common):
            for v in common[i + 1:]:
                if not g.has_edge(u, v):
                    yield x, y, u, v


@pytest.mark.slow
def test_diamond_reduction_costs_at_most_two_colours():
    for n in range(4, 8):
        for g in enumerate_graphs(n, dedup=True):
            chi = chromatic_number(g)[0]
            for x, y, u, v in _diamonds(g):
                reduced, trace = diamond_reduction(g, x, y, u, v)
                chi_reduced, cert = chromatic_number(reduced)
                assert chi <= chi_reduced + 2
                lifted = lift_coloring_through_diamond(g, trace, cert)
                assert is_proper_coloring(g, lifted.colors) and lifted.k <= chi_reduced + 2


@pytest.mark.slow
def test_apex_replacement_brackets_chi():
    for n in range(2, 8):
        for g in enumerate_graphs(n, dedup=True):
            chi = chromatic_number(g)[0]
            for x, y in g.edges():
                replaced, _ = apex_replacement(g, x, y)
                chi_apex = chromatic_number(replaced)[0]
                chi_rest = chromatic_number(delete_vertices(g, (1 << x) | (1 << y)))[0]
                assert chi - 2 <= chi_apex <= chi_rest + 1


def test_apex_replacement(diamond):
    reduced, trace = apex_replacement(diamond, 0, 1)
    assert reduced.n == 3 and reduced.edges() == [(0, 2), (1, 2)]
    assert trace.params["A"] == [2, 3] and trace.params["z"] == 2

    triangle = basic_graph("complete", 3)
    reduced, _ = apex_replacement(triangle, 0, 1)
    assert reduced.n == 2 and reduced.edge_count() == 1

    reduced, _ = apex_replacement(basic_graph("complete", 2), 0, 1)
    assert reduced.n == 1 and reduced.edge_count() == 0

    with pytest.raises(PreconditionViolated):
        apex_replacement(diamond, 2, 3)


# ---------------------------------------------------------------------------
# colouring extensions
# ---------------------------------------------------------------------------

def test_extend_over_clique_with_pendants(pendant_triangle):
    # G - K is vertices 3..7 compacted to 0..4
    cert = extend_coloring_over_clique(pendant_triangle, [0, 1, 2], [3, 1, 1, 1, 4])
    assert cert.colors == (1, 2, 3, 5, 5, 5, 1, 4)
    assert cert.k == 5
    assert is_proper_coloring(pendant_triangle, cert.colors)


def test_extend_over_single_vertex():
    g = build_graph(3, [(1, 2)])
    cert = extend_coloring_over_clique(g, [0], [1, 2])
    assert cert.colors == (1, 1, 2)

    star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    cert = extend_coloring_over_clique(star, [0], [1, 1, 1])
    assert cert.colors == (1, 2, 2, 2) and cert.k == 2


def test_extend_over_clique_preconditions(pendant_triangle):
    with pytest.raises(PreconditionViolated):
        extend_coloring_over_clique(pendant_triangle, [0, 3], [1, 1, 1, 1, 1, 1])
    with pytest.raises(PreconditionViolated):
        extend_coloring_over_clique(pendant_triangle, [0, 1, 2], [3, 1, 1, 1, 1])
    triangle = basic_graph("complete", 3)
    with pytest.raises(PreconditionViolated):
        extend_coloring_over_clique(triangle, [0, 1], [1])


def test_extend_over_odd_cycle(pendant_c5):
    cert = extend_coloring_over_odd_cycle(pendant_c5, [0, 1, 2, 3, 4], [1, 1, 1, 1, 1])
    assert cert.colors == (2, 1, 2, 1, 3, 1, 2, 1, 2, 1)
    assert cert.k == 3
    assert is_proper_coloring(pendant_c5, cert.colors)


def test_extend_over_bare_odd_cycle(c5):
    cert = extend_coloring_over_odd_cycle(c5, [0, 1, 2, 3, 4], ColoringCertificate((), 0))
    assert cert.colors == (2, 1, 2, 1, 3)


def test_extend_over_odd_cycle_preconditions(c5):
    with pytest.raises(PreconditionViolated):
        extend_coloring_over_odd_cycle(basic_graph("cycle", 6), list(range(6)), [])
    chorded = build_graph(6, [(i, (i + 1) % 5) for i in range(5)] + [(5, 0), (5, 2)])
    with pytest.raises(PreconditionViolated):
        extend_coloring_over_odd_cycle(chorded, [0, 1, 2, 3, 4], [1])
    with pytest.raises(PreconditionViolated):
        extend_coloring_over_odd_cycle(c5, [0, 2, 4, 1, 3], [])


# ---------------------------------------------------------------------------
# Hajnal's lemma
# ---------------------------------------------------------------------------

def test_hajnal_examples():
    result = hajnal_common_vertex(basic_graph("path", 3))
    assert result.vertex in (0, 2)
    assert result.common == 0b101
    assert hajnal_common_vertex(basic_graph("edgeless", 3)).common == 0b111
    with pytest.raises(PreconditionViolated):
        hajnal_common_vertex(basic_graph("cycle", 4))


@pytest.mark.parametrize("n", range(1, 7))
def test_hajnal_on_small_graphs(n):
    for g in enumerate_graphs(n, dedup=True):
        sets = all_maximum_independent_sets(g)
        if 2 * sets[0].bit_count() <= g.n:
            continue
        result = hajnal_common_vertex(g)
        assert all(s >> result.vertex & 1 for s in sets)


@pytest.mark.slow
def test_hajnal_on_order_seven_and_eight():
    for n in (7, 8):
        for g in enumerate_graphs(n, dedup=True):
            sets = all_maximum_independent_sets(g)
            if 2 * sets[0].bit_count() > g.n:
                vertex = hajnal_common_vertex(g).vertex
                assert all(s >> vertex & 1 for s in sets)


# ---------------------------------------------------------------------------
# inequality audit
# ---------------------------------------------------------------------------

def test_audit_subset_bound(c5, two_triangles):
    assert audit_proof_inequalities(c5).subset_bound_holds

    audit = audit_proof_inequalities(two_triangles)
    assert not audit.subset_bound_holds
    assert audit.subset_bound_violation is not None
    chi = chromatic_numbers_all_subsets(two_triangles)
    triangle = vertex_set([0, 1, 2])
    assert chi[triangle] + chi[two_triangles.full_mask ^ triangle] - 1 > audit.chi


def test_audit_even_cycle_chain():
    audit = audit_proof_inequalities(basic_graph("cycle", 6))
    assert not audit.even_hole_free
    assert len(audit.even_cycles) == 1
    chain = audit.even_cycles[0]
    assert chain.cycle_length == 6 and chain.p == 3
    assert chain.rho_h == 2 and chain.rho_h_prime == 2
    assert chain.alpha_gap == 3


def test_audit_diamonds_and_apexes(gadget):
    audit = audit_proof_inequalities(gadget)
    assert not audit.diamond_free
    assert audit.diamonds
    for m in audit.diamonds:
        reduced, _ = diamond_reduction(gadget, m.x, m.y, m.u, m.v)
        assert m.chi_reduced == chromatic_number(reduced)[0]
        assert m.chi_minus_two == audit.chi - 2
    assert {(a.x, a.y) for a in audit.apexes} == {(m.x, m.y) for m in audit.diamonds}


def test_audit_of_a_diamond_free_even_hole_free_graph(c5):
    audit = audit_proof_inequalities(c5)
    assert audit.diamond_free and audit.even_hole_free
    assert audit.diamonds == [] and audit.apexes == []
    assert (audit.chi, audit.f) == (3, 3)


def test_audit_cap():
    with pytest.raises(SizeCapExceeded):
        audit_proof_inequalities(basic_graph("edgeless", 13))
