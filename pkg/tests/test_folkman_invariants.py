import random
from fractions import Fraction

import pytest

from conftest import brute_f, random_graphs
from tools.constructions import basic_graph
from tools.errors import BudgetExceeded, MalformedInput, PreconditionViolated, SizeCapExceeded
from tools.exact_solvers import SolverBudget, chromatic_number, independence_number
from tools.folkman_invariants import (
    check_folkman_bound,
    folkman_number,
    independence_ratio,
    is_k_near_bipartite,
    min_deletion_to_half_stable,
    min_independence_ratio,
    potential,
    potential_superadditivity,
    potential_table,
)
from tools.graph_core import Graph, enumerate_graphs, induced_subgraph, vertex_set


def test_potential_examples(c5):
    assert potential(Graph(0, ())) == 2
    assert potential(c5) == 3
    assert potential(basic_graph("complete", 4)) == 4
    assert potential(basic_graph("cycle", 6)) == 2


@pytest.mark.parametrize("name", ["C6", "K23", "P4", "E3"])
def test_bipartite_graphs_have_f_two(small_graphs, name):
    f, witness = folkman_number(small_graphs[name])
    assert f == 2
    assert witness.subset == 0 and witness.rho == 2


def test_gadget_witness_is_the_triangle(gadget):
    f, witness = folkman_number(gadget)
    assert f == 3
    assert witness.subset == 0b000111
    assert witness.alpha == 1 and witness.rho == 3


def test_c5_witness_is_the_whole_cycle(c5):
    f, witness = folkman_number(c5)
    assert f == 3 and witness.subset == 0b11111 and witness.alpha == 2


@pytest.mark.parametrize("n", range(2, 7))
def test_complete_graphs(n):
    f, witness = folkman_number(basic_graph("complete", n))
    assert f == n
    assert witness.subset == (1 << n) - 1


def test_k1_is_dominated_by_the_null_graph():
    f, witness = folkman_number(basic_graph("complete", 1))
    assert f == 2 and witness.subset == 0


def test_folkman_number_against_brute_force():
    for g in random_graphs(seed=41, count=60, n_max=10):
        f, witness = folkman_number(g)
        assert f == brute_f(g)
        sub, _ = induced_subgraph(g, witness.subset)
        assert witness.alpha == independence_number(sub)[0]
        assert witness.rho == witness.subset.bit_count() - 2 * witness.alpha + 2 == f


@pytest.mark.slow
def test_folkman_number_large_random_sample():
    for g in random_graphs(seed=42, count=500, n_max=12):
        assert folkman_number(g)[0] == brute_f(g)


def test_folkman_number_is_monotone_under_induced_subgraphs():
    rng = random.Random(42)
    for g in random_graphs(seed=43, count=30, n_max=9):
        s = rng.randrange(g.full_mask + 1)
        assert folkman_number(induced_subgraph(g, s)[0])[0] <= folkman_number(g)[0]


def test_potential_changes_by_one_per_vertex():
    for g in random_graphs(seed=44, count=20, n_max=9):
        table = potential_table(g)
        for s in range(g.full_mask + 1):
            for v in range(g.n):
                if not s >> v & 1:
                    assert abs(int(table[s | 1 << v]) - int(table[s])) == 1


def test_large_graphs_need_a_budget():
    big = basic_graph("edgeless", 25)
    with pytest.raises(SizeCapExceeded):
        folkman_number(big)
    with pytest.raises(BudgetExceeded):
        folkman_number(big, SolverBudget(node_limit=10))


def test_large_graph_search_with_enough_budget():
    f, witness = folkman_number(basic_graph("complete", 25), SolverBudget(node_limit=1000))
    assert f == 25 and witness.subset == (1 << 25) - 1


def test_independence_ratio(c5):
    assert independence_ratio(c5) == Fraction(2, 5)
    with pytest.raises(MalformedInput):
        independence_ratio(Graph(0, ()))


def test_min_independence_ratio(c5, grotzsch):
    result = min_independence_ratio(c5)
    assert result.mir == Fraction(2, 5)
    assert result.argmin == 0b11111
    assert result.hall_ratio == Fraction(5, 2)

    edgeless = min_independence_ratio(basic_graph("edgeless", 4))
    assert edgeless.mir == 1 and edgeless.argmin == 1

    assert min_independence_ratio(grotzsch).mir >= Fraction(1, 3)
    with pytest.raises(MalformedInput):
        min_independence_ratio(Graph(0, ()))


def test_half_independence_ratio_forces_bipartite():
    for n in range(1, 7):
        for g in enumerate_graphs(n, dedup=True):
            if min_independence_ratio(g).mir >= Fraction(1, 2):
                assert chromatic_number(g)[0] <= 2


def test_min_deletion_examples(c5):
    assert min_deletion_to_half_stable(basic_graph("cycle", 4)) == (0, 0)
    assert min_deletion_to_half_stable(c5) == (1, 0b00001)
    assert min_deletion_to_half_stable(basic_graph("complete", 5)) == (3, 0b00111)
    assert min_deletion_to_half_stable(Graph(0, ())) == (0, 0)


def test_min_deletion_leaves_a_half_stable_graph():
    for g in random_graphs(seed=45, count=40, n_max=10):
        k, removed = min_deletion_to_half_stable(g)
        rest, _ = induced_subgraph(g, g.full_mask & ~removed)
        assert removed.bit_count() == k
        assert 2 * independence_number(rest)[0] >= rest.n


@pytest.mark.parametrize("n", range(7))
def test_min_deletion_equals_excess_potential(n):
    for g in enumerate_graphs(n, dedup=True):
        assert min_deletion_to_half_stable(g)[0] == max(0, potential(g) - 2)


@pytest.mark.slow
def test_min_deletion_equals_excess_potential_on_order_seven():
    for g in enumerate_graphs(7, dedup=True):
        k, removed = min_deletion_to_half_stable(g)
        assert k == max(0, potential(g) - 2) == removed.bit_count()


def test_near_bipartite(gadget, c5):
    assert is_k_near_bipartite(gadget, 1).holds
    result = is_k_near_bipartite(gadget, 0)
    assert not result.holds and result.f == 3
    assert result.witness.subset == 0b000111
    assert is_k_near_bipartite(basic_graph("cycle", 6), 0).holds
    with pytest.raises(PreconditionViolated):
        is_k_near_bipartite(c5, -1)


@pytest.mark.parametrize("name, chi, f", [("C5", 3, 3), ("K4", 4, 4), ("gadget", 3, 3), ("C6", 2, 2)])
def test_folkman_bound_examples(small_graphs, name, chi, f):
    report = check_folkman_bound(small_graphs[name])
    assert (report.chi, report.f) == (chi, f)
    assert report.holds


def test_folkman_bound_on_grotzsch(grotzsch):
    report = check_folkman_bound(grotzsch)
    assert report.chi == 4 and report.f >= 4 and report.holds


@pytest.mark.parametrize("n", range(7))
def test_folkman_bound_on_all_small_graphs(n):
    for g in enumerate_graphs(n, dedup=True):
        assert check_folkman_bound(g).holds


@pytest.mark.slow
def test_folkman_bound_on_all_graphs_of_order_seven():
    assert all(check_folkman_bound(g).holds for g in enumerate_graphs(7, dedup=True))


def test_potential_superadditivity(two_triangles):
    first, second = vertex_set([0, 1, 2]), vertex_set([3, 4, 5])
    result = potential_superadditivity(two_triangles, first, second)
    assert (result.rho_first, result.rho_second, result.rho_union) == (3, 3, 4)
    assert result.holds
    with pytest.raises(PreconditionViolated):
        potential_superadditivity(two_triangles, first, vertex_set([2, 3]))


def test_superadditivity_on_random_splits():
    rng = random.Random(46)
    for g in random_graphs(seed=47, count=40, n_max=10):
        first = rng.randrange(g.full_mask + 1)
        second = rng.randrange(g.full_mask + 1) & ~first
        assert potential_superadditivity(g, first, second).holds
