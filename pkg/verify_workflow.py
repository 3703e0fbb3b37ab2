"""
LangGraph workflow orchestration for batch invariant verification.

Corpus -> Verifier -> Report, with an empty or failed corpus routed straight
to the report.

Author: Graph Invariants Team
Date: 2026-10-19
"""

import asyncio
import sys
import time
from typing import Any, Iterable, Optional

from langgraph.graph import END, START, StateGraph

from agents import CorpusAgent, ReportAgent, VerifierAgent
from state import VerificationReport, VerificationState
from tools.exact_solvers import SolverBudget
from tools.graph_core import MAX_VERTICES


def create_verification_graph():
    """
    Build the three-stage verification pipeline.

    ┌──────────────────────────────────────────────────────────┐
    │ 1. Corpus   (materialise graphs, keep malformed records) │
    │ 2. Verifier (per-graph checks, ordered process fan-out)  │
    │ 3. Report   (aggregate counts and violations)            │
    └──────────────────────────────────────────────────────────┘

    Returns:
        Compiled LangGraph workflow
    """
    graph = StateGraph(VerificationState)

    graph.add_node("corpus", CorpusAgent())
    graph.add_node("verifier", VerifierAgent())
    graph.add_node("report", ReportAgent())

    graph.add_edge(START, "corpus")

    def should_verify(state: VerificationState) -> str:
        if state["workflow_status"] == "corpus_failed":
            print("[WARNING] corpus failed, skipping to report", file=sys.stderr)
            return "report"
        if not state["records"]:
            return "report"
        return "verifier"

    graph.add_conditional_edges("corpus", should_verify)
    graph.add_edge("verifier", "report")
    graph.add_edge("report", END)

    compiled_graph = graph.compile()
    print("[OK] Verification graph compiled: Corpus -> Verifier -> Report", file=sys.stderr)
    return compiled_graph


VERIFY_PIPELINE = create_verification_graph()


def initial_state(corpus: Iterable[Any], invariant: str, workers: int = 1,
                  budget: Optional[SolverBudget] = None, descriptor: str = "corpus",
                  max_n: int = MAX_VERTICES, timing: bool = False) -> VerificationState:
    budget = budget or SolverBudget()
    return {
        "corpus_descriptor": descriptor,
        "corpus": corpus,
        "invariant": invariant,
        "workers": workers,
        "node_limit": budget.node_limit,
        "time_limit_ms": budget.time_limit_ms,
        "max_n": max_n,
        "timing": timing,
        "records": [],
        "stopped_at": None,
        "outcomes": [],
        "report": None,
        "current_agent": "",
        "workflow_status": "started",
        "error_log": [],
        "start_time": time.monotonic(),
    }


async def abatch_verify(corpus: Iterable[Any], invariant: str, parallelism: int = 1,
                        budget: Optional[SolverBudget] = None, descriptor: str = "corpus",
                        max_n: int = MAX_VERTICES, timing: bool = False) -> VerificationState:
    state = initial_state(corpus, invariant, parallelism, budget, descriptor, max_n, timing)
    return await VERIFY_PIPELINE.ainvoke(state)


def batch_verify(corpus: Iterable[Any], invariant: str, parallelism: int = 1,
                 budget: Optional[SolverBudget] = None, descriptor: str = "corpus",
                 max_n: int = MAX_VERTICES, timing: bool = False) -> VerificationReport:
    """
    Check one invariant on every corpus graph.

    Args:
        corpus: Graphs or StreamRecords (a GraphStream, enumerate_graphs, a list)
        invariant: one of state.INVARIANTS
        parallelism: worker processes
        budget: per-solver-call limits; exhausted graphs are counted as skipped

    Returns:
        the VerificationReport, identical at every parallelism level
    """
    final_state = asyncio.run(abatch_verify(corpus, invariant, parallelism, budget, descriptor, max_n, timing))
    return final_state["report"]
