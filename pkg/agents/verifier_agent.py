"""
Verifier Agent for per-graph invariant checks.

Each named invariant is a module-level check function taking a decoded graph
and a SolverBudget, so the work can be shipped to a multiprocessing pool.
Outcomes come back in input order whatever the parallelism.

Author: Graph Invariants Team
Date: 2026-10-19
"""

import sys
from multiprocessing import Pool
from typing import Callable, Dict, Optional, Tuple

from state import CheckOutcome, CorpusRecord, VerificationState
from tools.constructions import mycielski
from tools.errors import BudgetExceeded, FolkmanError
from tools.exact_solvers import (
    SolverBudget,
    all_maximum_independent_sets,
    chromatic_number,
    independence_number,
)
from tools.folkman_invariants import (
    PotentialWitness,
    check_folkman_bound,
    folkman_number,
    is_k_near_bipartite,
    min_deletion_to_half_stable,
    potential,
)
from tools.graph_core import Graph, induced_subgraph, members
from tools.graph_io import parse_graph6, write_graph6
from tools.proof_machinery import hajnal_common_vertex

# (holds, values); holds is None when the invariant does not apply
CheckResult = Tuple[Optional[bool], Dict[str, object]]

NEAR_BIPARTITE_KS = (0, 1, 2)


def _check_folkman(g: Graph, budget: SolverBudget) -> CheckResult:
    report = check_folkman_bound(g, budget)
    return report.holds, {"chi": report.chi, "f": report.f}


def _check_hajnal(g: Graph, budget: SolverBudget) -> CheckResult:
    alpha, _ = independence_number(g, budget)
    if 2 * alpha <= g.n:
        return None, {"alpha": alpha}
    common = g.full_mask
    for s in all_maximum_independent_sets(g):
        common &= s
    values = {"alpha": alpha, "common": members(common)}
    if not common:
        return False, values
    result = hajnal_common_vertex(g)
    values["vertex"] = result.vertex
    values["constructive"] = result.constructive
    return bool(common >> result.vertex & 1), values


def _check_half_stable_deletion(g: Graph, budget: SolverBudget) -> CheckResult:
    deletion, _ = min_deletion_to_half_stable(g)
    rho = potential(g)
    return deletion == max(0, rho - 2), {"deletion": deletion, "rho": rho}


def _brute_force_f(g: Graph) -> int:
    return max(PotentialWitness.of(g, s).rho for s in range(g.full_mask + 1))


def _max_induced_deletion(g: Graph) -> int:
    return max(min_deletion_to_half_stable(induced_subgraph(g, s)[0])[0] for s in range(g.full_mask + 1))


def _check_near_bipartite(g: Graph, budget: SolverBudget) -> CheckResult:
    f_brute = _brute_force_f(g)
    deletion = _max_induced_deletion(g)
    values: Dict[str, object] = {"f": folkman_number(g)[0], "f_brute": f_brute, "max_deletion": deletion}
    holds = True
    for k in NEAR_BIPARTITE_KS:
        answers = [is_k_near_bipartite(g, k).holds, f_brute <= k + 2, deletion <= k]
        values[f"k{k}"] = answers
        holds = holds and len(set(answers)) == 1
    return holds, values


def _check_mycielski_chi(g: Graph, budget: SolverBudget) -> CheckResult:
    if g.edge_count() == 0:
        return None, {"edges": 0}
    chi, _ = chromatic_number(g, budget)
    chi_mu, _ = chromatic_number(mycielski(g), budget)
    return chi_mu == chi + 1, {"chi": chi, "chi_mycielski": chi_mu}


def _check_roundtrip(g: Graph, budget: SolverBudget) -> CheckResult:
    text = write_graph6(g)
    back = parse_graph6(text)
    return back == g and write_graph6(back) == text, {"graph6": text}


INVARIANT_CHECKS: Dict[str, Callable[[Graph, SolverBudget], CheckResult]] = {
    "folkman": _check_folkman,
    "hajnal": _check_hajnal,
    "half-stable-deletion": _check_half_stable_deletion,
    "near-bipartite-equiv": _check_near_bipartite,
    "mycielski-chi": _check_mycielski_chi,
    "graph6-roundtrip": _check_roundtrip,
}


def run_check(task: Tuple[str, CorpusRecord, SolverBudget]) -> CheckOutcome:
    """Check one record; picklable entry point for pool workers."""
    invariant, record, budget = task
    position, text = record["position"], record["graph6"]
    if text is None:
        return {"position": position, "graph6": None, "status": "malformed", "values": {}, "message": record["error"]}
    try:
        holds, values = INVARIANT_CHECKS[invariant](parse_graph6(text), budget)
    except BudgetExceeded as e:
        return {"position": position, "graph6": text, "status": "budget", "values": {}, "message": str(e)}
    except FolkmanError as e:
        return {"position": position, "graph6": text, "status": "malformed", "values": {}, "message": str(e)}
    if holds is None:
        status = "vacuous"
    else:
        status = "pass" if holds else "violation"
    return {"position": position, "graph6": text, "status": status, "values": values, "message": None}


class VerifierAgent:
    """
    Fans invariant checks out over the corpus.

    workers == 1 runs in-process; otherwise an ordered Pool.imap keeps the
    outcomes aligned with the records.
    """

    def __init__(self, chunksize: int = 16):
        self.chunksize = chunksize
        print("[OK] VerifierAgent initialized", file=sys.stderr)

    async def __call__(self, state: VerificationState) -> VerificationState:
        invariant = state["invariant"]
        if invariant not in INVARIANT_CHECKS:
            state["error_log"].append(f"unknown invariant {invariant!r}")
            state["workflow_status"] = "verify_failed"
            state["outcomes"] = []
            return state

        budget = SolverBudget(node_limit=state["node_limit"], time_limit_ms=state["time_limit_ms"])
        tasks = [(invariant, record, budget) for record in state["records"]]
        workers = max(1, state["workers"])
        print(f"[Verify] {invariant}: {len(tasks)} records on {workers} worker(s)", file=sys.stderr)

        if workers == 1:
            outcomes = [run_check(task) for task in tasks]
        else:
            with Pool(processes=workers) as pool:
                outcomes = list(pool.imap(run_check, tasks, chunksize=self.chunksize))

        for outcome in outcomes:
            if outcome["status"] == "budget":
                print(f"[WARNING] line {outcome['position']}: {outcome['message']}", file=sys.stderr)
            elif outcome["status"] == "violation":
                print(f"[Verify] violation at line {outcome['position']}: {outcome['graph6']}", file=sys.stderr)

        state["outcomes"] = outcomes
        state["current_agent"] = "verifier"
        state["workflow_status"] = "verified"
        return state
