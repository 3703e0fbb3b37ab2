"""
Parameterised variants of the Folkman bound.

alpha_p (largest p-colourable induced subgraph), the objective
max_S |S| - c * (alpha_p(G[S]) - p), the generalized Mycielski arithmetic for
p = 2, the minimum independence ratio of Mycielski graphs, the desk-scale
odd-cycle-transversal gap for k-near-bipartite graphs, and the optimality of
the coefficient 2 for p = 1.

Author: Graph Invariants Team
Date: 2026-10-19
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from .constructions import generalized_mycielski, mycielski_iterated
from .errors import BudgetExceeded, PreconditionViolated, SizeCapExceeded
from .exact_solvers import (
    SUBSET_TABLE_CAP,
    SolverBudget,
    chromatic_number,
    independence_number,
    independence_numbers_all_subsets,
    is_k_colorable,
    odd_cycle_transversal,
    subset_popcounts,
)
from .folkman_invariants import folkman_number, min_independence_ratio
from .graph_core import (
    MAX_VERTICES,
    Graph,
    VertexSet,
    enumerate_graphs,
    induced_subgraph,
    is_bipartite,
    is_independent,
    lowest,
    masks_of_size,
)
from .graph_io import write_graph6

ALPHA_P_CAP = 20
F_P_CAP = 16
REED_GAP_CAP = 8
EXACT_CHI_CAP = 24
MYCIELSKI_MIR_CAP = 4


def _p_colorable(g: Graph, s: VertexSet, p: int) -> bool:
    if p == 1:
        return is_independent(g, s)
    if p == 2:
        return is_bipartite(g, s)
    if s.bit_count() <= p:
        return True
    return is_k_colorable(induced_subgraph(g, s)[0], p) is not None


def alpha_p(g: Graph, p: int) -> Tuple[int, VertexSet]:
    """
    Largest S with chi(G[S]) <= p, least mask among the largest.

    Sizes are tried from the top down (from alpha(g) when p = 1).
    """
    if p < 1:
        raise PreconditionViolated(f"p must be at least 1, got {p}")
    if g.n > ALPHA_P_CAP:
        raise SizeCapExceeded("alpha_p", g.n, ALPHA_P_CAP)
    top = independence_number(g)[0] if p == 1 else g.n
    for size in range(top, -1, -1):
        for mask in masks_of_size(g.n, size):
            if _p_colorable(g, mask, p):
                return size, mask
    return 0, 0


def alpha_p_table(g: Graph, p: int) -> List[int]:
    """
    alpha_p(G[S]) for every mask S.

    A set is p-colourable only if every one-smaller subset is, so the
    colourability test runs only on sets all of whose maximal proper
    subsets pass.
    """
    size = 1 << g.n
    table = [0] * size
    for s in range(1, size):
        count = s.bit_count()
        best_sub = 0
        all_sub_colorable = True
        rest = s
        while rest:
            v = lowest(rest)
            rest &= rest - 1
            sub = table[s & ~(1 << v)]
            best_sub = max(best_sub, sub)
            if sub < count - 1:
                all_sub_colorable = False
        if all_sub_colorable and _p_colorable(g, s, p):
            table[s] = count
        else:
            table[s] = best_sub
    return table


def _best_by_size_then_mask(values: List[Fraction]) -> Tuple[Fraction, VertexSet]:
    top = max(values)
    return top, min((s for s, v in enumerate(values) if v == top), key=lambda s: (s.bit_count(), s))


def _objective_p1(g: Graph, c: Fraction) -> Tuple[Fraction, VertexSet]:
    # maximise den*|S| - num*alpha(S) in integers, then add c
    alpha = independence_numbers_all_subsets(g).astype(np.int64)
    sizes = subset_popcounts(g.n).astype(np.int64)
    scaled = c.denominator * sizes - c.numerator * alpha
    top = int(scaled.max())
    candidates = np.flatnonzero(scaled == top)
    order = np.lexsort((candidates, sizes[candidates]))
    return Fraction(top, c.denominator) + c, int(candidates[order[0]])


def f_p_objective(g: Graph, p: int, c: Fraction) -> Tuple[Fraction, VertexSet]:
    """
    Exact max over all S, the null set included, of |S| - c * (alpha_p(G[S]) - p).

    Witness: smallest size, then least mask. p = 1 runs on the numpy
    independence table and accepts up to SUBSET_TABLE_CAP vertices.
    """
    c = Fraction(c)
    if p < 1:
        raise PreconditionViolated(f"p must be at least 1, got {p}")
    if c <= 0:
        raise PreconditionViolated(f"c must be positive, got {c}")
    if p == 1:
        if g.n > SUBSET_TABLE_CAP:
            raise SizeCapExceeded("f_p_objective", g.n, SUBSET_TABLE_CAP)
        return _objective_p1(g, c)
    if g.n > F_P_CAP:
        raise SizeCapExceeded("f_p_objective", g.n, F_P_CAP)
    table = alpha_p_table(g, p)
    values = [s.bit_count() - c * (a - p) for s, a in enumerate(table)]
    return _best_by_size_then_mask(values)


# ---------------------------------------------------------------------------
# Generalized Mycielski arithmetic
# ---------------------------------------------------------------------------

def gen_mycielski_vertex_formula(k: int, ell: int) -> int:
    return (ell + 1) * 2 ** (k - 1) - 1


def gen_mycielski_alpha2_formula(k: int, ell: int) -> int:
    return ell * 2 ** (k - 1)


def f2_expression(k: int, ell: int, c: Fraction) -> Fraction:
    return gen_mycielski_vertex_formula(k, ell) - Fraction(c) * (gen_mycielski_alpha2_formula(k, ell) - 2)


def c2_failure_threshold(k: int, c: Fraction) -> Optional[int]:
    """
    Least ell >= 2 with f2_expression(k, ell, c) < k + 1, or None when c <= 1.

    The expression is 2^(k-1) - 1 + 2c + ell * 2^(k-1) * (1 - c), linear in ell.
    """
    c = Fraction(c)
    if k < 2:
        raise PreconditionViolated(f"k must be at least 2, got {k}")
    if c <= 1:
        return None
    half = 2 ** (k - 1)
    bound = Fraction(half - 1 + 2 * c - (k + 1), half * (c - 1))
    ell = max(2, int(bound // 1) + 1)
    while f2_expression(k, ell, c) >= k + 1:
        ell += 1
    while ell > 2 and f2_expression(k, ell - 1, c) < k + 1:
        ell -= 1
    return ell


@dataclass(frozen=True)
class GeneralizedMycielskiAudit:
    """
    Formula values, exact values where computable, and the f_2 expression.

    formula_only names the quantities that are reported from the closed form
    alone because the exact computation was over a cap or budget.
    """
    k: int
    ell: int
    c: Fraction
    vertices_formula: int
    alpha2_formula: int
    vertices_exact: Optional[int]
    alpha2_exact: Optional[int]
    chi_exact: Optional[int]
    f2_value: Fraction
    f2_at_least_k_plus_1: bool
    failure_threshold: Optional[int]
    formula_only: List[str] = field(default_factory=list)


def audit_generalized_mycielski(k: int, ell: int, c: Fraction,
                                budget: Optional[SolverBudget] = None) -> GeneralizedMycielskiAudit:
    c = Fraction(c)
    if k < 2 or ell < 2:
        raise PreconditionViolated(f"need k >= 2 and ell >= 2, got k={k}, ell={ell}")
    vertices_formula = gen_mycielski_vertex_formula(k, ell)
    alpha2_formula = gen_mycielski_alpha2_formula(k, ell)
    vertices_exact = alpha2_exact = chi_exact = None
    formula_only: List[str] = []

    g = None
    if vertices_formula <= MAX_VERTICES:
        g = generalized_mycielski(k, ell)
        vertices_exact = g.n
    else:
        formula_only.append("vertices")
    if g is not None and g.n <= ALPHA_P_CAP:
        alpha2_exact = alpha_p(g, 2)[0]
    else:
        formula_only.append("alpha2")
    if g is not None and g.n <= EXACT_CHI_CAP:
        try:
            chi_exact = chromatic_number(g, budget)[0]
        except BudgetExceeded:
            formula_only.append("chi")
    else:
        formula_only.append("chi")

    value = f2_expression(k, ell, c)
    return GeneralizedMycielskiAudit(
        k=k,
        ell=ell,
        c=c,
        vertices_formula=vertices_formula,
        alpha2_formula=alpha2_formula,
        vertices_exact=vertices_exact,
        alpha2_exact=alpha2_exact,
        chi_exact=chi_exact,
        f2_value=value,
        f2_at_least_k_plus_1=value >= k + 1,
        failure_threshold=c2_failure_threshold(k, c),
        formula_only=formula_only,
    )


# ---------------------------------------------------------------------------
# Mycielski independence ratios
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MycielskiMirEntry:
    k: int
    vertices: int
    mir: Fraction
    argmin: VertexSet
    bound: Optional[Fraction]
    passes: Optional[bool]


def mycielski_mir_report(k_max: int) -> List[MycielskiMirEntry]:
    """Exact mir(M_k) for 2 <= k <= k_max against the 1/k bound (k >= 3)."""
    if k_max < 2:
        raise PreconditionViolated(f"k_max must be at least 2, got {k_max}")
    if k_max > MYCIELSKI_MIR_CAP:
        raise SizeCapExceeded("mycielski_mir_report k_max", k_max, MYCIELSKI_MIR_CAP)
    entries = []
    for k in range(2, k_max + 1):
        g = mycielski_iterated(k)
        result = min_independence_ratio(g)
        bound = Fraction(1, k) if k >= 3 else None
        passes = None if bound is None else result.mir >= bound
        entries.append(MycielskiMirEntry(k, g.n, result.mir, result.argmin, bound, passes))
    return entries


# ---------------------------------------------------------------------------
# Odd cycle transversals of near-bipartite graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ReedGapReport:
    """
    Attributes:
        n_max: largest order swept
        k: near-bipartiteness parameter
        graphs_checked: k-near-bipartite graphs found
        max_transversal: largest minimum odd cycle transversal among them
        extremal: graph6 records of the graphs attaining it, in sweep order
    """
    n_max: int
    k: int
    graphs_checked: int
    max_transversal: int
    extremal: List[str]


def reed_gap(n_max: int, k: int) -> ReedGapReport:
    if n_max > REED_GAP_CAP:
        raise SizeCapExceeded("reed_gap n_max", n_max, REED_GAP_CAP)
    if k < 0:
        raise PreconditionViolated(f"k must be non-negative, got {k}")
    checked = 0
    best = 0
    extremal: List[str] = []
    for n in range(n_max + 1):
        for g in enumerate_graphs(n, dedup=True):
            if folkman_number(g)[0] > k + 2:
                continue
            checked += 1
            size, _ = odd_cycle_transversal(g)
            if size > best:
                best = size
                extremal = []
            if size == best:
                extremal.append(write_graph6(g))
    return ReedGapReport(n_max, k, checked, best, extremal)


# ---------------------------------------------------------------------------
# Optimality of the coefficient for p = 1
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoefficientProbe:
    name: str
    chi: int
    value: Fraction
    witness: VertexSet
    holds: bool


@dataclass(frozen=True)
class CoefficientReport:
    c: Fraction
    probes: List[CoefficientProbe]

    @property
    def bound_holds(self) -> bool:
        return all(probe.holds for probe in self.probes)


def folkman_coefficient_report(c: Fraction, budget: Optional[SolverBudget] = None) -> CoefficientReport:
    """
    Evaluate max_S |S| - c * (alpha(G[S]) - 1) against chi on C5 and on
    M_floor(c).

    For 2 < c < MYCIELSKI_MIR_CAP + 1 at least one probe falls below chi;
    for c <= 2 both hold.

    Raises:
        SizeCapExceeded: M_floor(c) is beyond MYCIELSKI_MIR_CAP, so the
            probe that decides the bound cannot be built
    """
    c = Fraction(c)
    if c <= 0:
        raise PreconditionViolated(f"c must be positive, got {c}")
    order = int(c // 1)
    if order > MYCIELSKI_MIR_CAP:
        raise SizeCapExceeded(f"coefficient probe M_{order}", order, MYCIELSKI_MIR_CAP)
    probes_for = [("C5", mycielski_iterated(2))]
    if order >= 3:
        probes_for.append((f"M_{order}", mycielski_iterated(order)))
    probes = []
    for name, g in probes_for:
        value, witness = f_p_objective(g, 1, c)
        chi, _ = chromatic_number(g, budget)
        probes.append(CoefficientProbe(name, chi, value, witness, chi <= value))
    return CoefficientReport(c, probes)

