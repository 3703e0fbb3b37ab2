"""
Folkman invariants: potential, Folkman number with witness, independence
ratios, half-stability deletion numbers and near-bipartiteness.

Every quantity here is a maximum or minimum over induced subgraphs, so the
work is done on the all-subsets independence table from exact_solvers and
reduced with numpy.

Author: Graph Invariants Team
Date: 2026-10-19
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from .errors import MalformedInput, PreconditionViolated, SizeCapExceeded
from .exact_solvers import (
    SUBSET_TABLE_CAP,
    ColoringCertificate,
    SolverBudget,
    _Meter,
    chromatic_number,
    independence_number,
    independence_numbers_all_subsets,
    subset_popcounts,
)
from .graph_core import Graph, VertexSet, induced_subgraph, masks_of_size


@dataclass(frozen=True)
class PotentialWitness:
    """
    An induced subgraph together with its potential.

    Attributes:
        subset: vertex mask of the induced subgraph (0 for the null graph)
        alpha: independence number of the induced subgraph
        rho: |subset| - 2 * alpha + 2
    """
    subset: VertexSet
    alpha: int
    rho: int

    @classmethod
    def of(cls, g: Graph, subset: VertexSet) -> "PotentialWitness":
        alpha, _ = independence_number(induced_subgraph(g, subset)[0])
        return cls(subset, alpha, subset.bit_count() - 2 * alpha + 2)


def potential(g: Graph) -> int:
    """rho(g) = |V| - 2 alpha + 2."""
    alpha, _ = independence_number(g)
    return g.n - 2 * alpha + 2


def _tables(g: Graph) -> Tuple[np.ndarray, np.ndarray]:
    if g.n > SUBSET_TABLE_CAP:
        raise SizeCapExceeded("subset table", g.n, SUBSET_TABLE_CAP)
    alpha = independence_numbers_all_subsets(g)
    return alpha, subset_popcounts(g.n)


def potential_table(g: Graph) -> np.ndarray:
    """rho(G[S]) for every mask S."""
    alpha, sizes = _tables(g)
    return sizes.astype(np.int16) - 2 * alpha.astype(np.int16) + 2


def _first_by_size_then_mask(sizes: np.ndarray, candidates: np.ndarray) -> int:
    order = np.lexsort((candidates, sizes[candidates]))
    return int(candidates[order[0]])


def _folkman_by_search(g: Graph, budget: Optional[SolverBudget]) -> Tuple[int, PotentialWitness]:
    # rho(S) <= |S|, so sizes below the best value cannot improve or tie
    meter = _Meter(budget, "folkman_number")
    best = PotentialWitness(0, 0, 2)
    for size in range(g.n, 0, -1):
        if size < best.rho:
            break
        for mask in masks_of_size(g.n, size):
            meter.tick(best.rho)
            witness = PotentialWitness.of(g, mask)
            if witness.rho > best.rho or (witness.rho == best.rho and size < best.subset.bit_count()):
                best = witness
    return best.rho, best


def folkman_number(g: Graph, budget: Optional[SolverBudget] = None) -> Tuple[int, PotentialWitness]:
    """
    f(g): the largest potential of an induced subgraph, the null one included.

    Up to SUBSET_TABLE_CAP vertices the whole table is reduced at once; above
    it a size-descending search runs under the given budget.

    Returns:
        (f, witness) with the witness of smallest size, then least mask
    """
    if g.n > SUBSET_TABLE_CAP:
        if budget is None or (budget.node_limit is None and budget.time_limit_ms is None):
            raise SizeCapExceeded("folkman_number without a budget", g.n, SUBSET_TABLE_CAP)
        return _folkman_by_search(g, budget)
    alpha, sizes = _tables(g)
    rho = sizes.astype(np.int16) - 2 * alpha.astype(np.int16) + 2
    f = int(rho.max())
    subset = _first_by_size_then_mask(sizes, np.flatnonzero(rho == f))
    return f, PotentialWitness(subset, int(alpha[subset]), f)


def independence_ratio(g: Graph) -> Fraction:
    if g.n == 0:
        raise MalformedInput("independence ratio of the null graph is undefined")
    alpha, _ = independence_number(g)
    return Fraction(alpha, g.n)


@dataclass(frozen=True)
class IndependenceRatioResult:
    mir: Fraction
    argmin: VertexSet
    hall_ratio: Fraction


def min_independence_ratio(g: Graph) -> IndependenceRatioResult:
    """
    Exact minimum of alpha(G[S]) / |S| over non-empty S.

    The argmin has the smallest size, then the least mask; hall_ratio is the
    reciprocal.
    """
    if g.n == 0:
        raise MalformedInput("minimum independence ratio of the null graph is undefined")
    alpha, sizes = _tables(g)
    best: Optional[Fraction] = None
    argmin = 0
    for size in range(1, g.n + 1):
        layer = np.flatnonzero(sizes == size)
        low = int(alpha[layer].min())
        ratio = Fraction(low, size)
        if best is None or ratio < best:
            best = ratio
            argmin = int(layer[alpha[layer] == low][0])
    return IndependenceRatioResult(best, argmin, 1 / best)


def min_deletion_to_half_stable(g: Graph) -> Tuple[int, VertexSet]:
    """
    Fewest vertices Y whose deletion leaves alpha >= |V - Y| / 2.

    Among minimum deletions the least mask Y is returned; the null graph
    counts as half-stable.
    """
    alpha, sizes = _tables(g)
    stable = 2 * alpha.astype(np.int16) >= sizes
    kept = np.where(stable, sizes, -1)
    largest = int(kept.max())
    remaining = int(np.flatnonzero(kept == largest).max())
    return g.n - largest, g.full_mask ^ remaining


@dataclass(frozen=True)
class NearBipartiteResult:
    holds: bool
    f: int
    witness: Optional[PotentialWitness] = None


def is_k_near_bipartite(g: Graph, k: int) -> NearBipartiteResult:
    """f(g) <= k + 2; when it fails the witness has potential above k + 2."""
    if k < 0:
        raise PreconditionViolated(f"k must be non-negative, got {k}")
    f, witness = folkman_number(g)
    if f <= k + 2:
        return NearBipartiteResult(True, f)
    return NearBipartiteResult(False, f, witness)


@dataclass(frozen=True)
class FolkmanBoundReport:
    chi: int
    coloring: ColoringCertificate
    f: int
    witness: PotentialWitness
    holds: bool


def check_folkman_bound(g: Graph, budget: Optional[SolverBudget] = None) -> FolkmanBoundReport:
    """chi(g) <= f(g), with both certificates."""
    f, witness = folkman_number(g, budget)
    chi, coloring = chromatic_number(g, budget)
    return FolkmanBoundReport(chi, coloring, f, witness, chi <= f)


@dataclass(frozen=True)
class SuperadditivityResult:
    rho_union: int
    rho_first: int
    rho_second: int
    holds: bool


def potential_superadditivity(g: Graph, first: VertexSet, second: VertexSet) -> SuperadditivityResult:
    """rho(G[A u B]) >= rho(G[A]) + rho(G[B]) - 2 for disjoint A, B."""
    if first & second:
        raise PreconditionViolated("vertex sets must be disjoint")
    a = PotentialWitness.of(g, first).rho
    b = PotentialWitness.of(g, second).rho
    union = PotentialWitness.of(g, first | second).rho
    return SuperadditivityResult(union, a, b, union >= a + b - 2)
