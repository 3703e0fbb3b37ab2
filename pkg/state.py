"""
State management for the batch verification workflow.

Defines the VerificationState that flows through LangGraph and the agents,
the report types it produces, and the validated RunConfig every CLI run
starts from.

Author: Graph Invariants Team
Date: 2026-10-19
"""

import os
from typing import Any, Dict, Iterable, List, Literal, Mapping, Optional, TypedDict

from pydantic import BaseModel, Field, field_validator

from tools.exact_solvers import SolverBudget
from tools.graph_core import MAX_VERTICES

InvariantName = Literal[
    "folkman",
    "hajnal",
    "half-stable-deletion",
    "near-bipartite-equiv",
    "mycielski-chi",
    "graph6-roundtrip",
]

INVARIANTS = (
    "folkman",
    "hajnal",
    "half-stable-deletion",
    "near-bipartite-equiv",
    "mycielski-chi",
    "graph6-roundtrip",
)

CheckStatus = Literal["pass", "violation", "vacuous", "budget", "malformed"]


class CorpusRecord(TypedDict):
    """
    One corpus item after materialisation.

    Attributes:
        position: 1-based record position (line number for graph6 streams)
        graph6: encoded graph, or None when the record was malformed
        error: diagnostic for a malformed record
    """
    position: int
    graph6: Optional[str]
    error: Optional[str]


class CheckOutcome(TypedDict):
    position: int
    graph6: Optional[str]
    status: CheckStatus
    values: Dict[str, Any]
    message: Optional[str]


class ViolationRecord(TypedDict):
    position: int
    graph6: str
    invariant: str
    values: Dict[str, Any]


class VerificationReport(TypedDict):
    """
    Result of one corpus sweep.

    checked + skipped + unreached equals the number of records read;
    skipped splits into budget_exhausted and malformed. unreached counts
    records never checked because the run stopped early, including the
    record that stopped a strict stream. vacuous counts checked graphs the
    invariant does not apply to. passed is True iff there are no violations
    and nothing was left unreached.
    """
    corpus: str
    invariant: str
    checked: int
    skipped: int
    unreached: int
    vacuous: int
    budget_exhausted: int
    malformed: int
    violations: List[ViolationRecord]
    passed: bool
    elapsed_ms: Optional[float]


class VerificationState(TypedDict):
    """
    Complete state for the batch verification workflow.

    CorpusAgent fills records, VerifierAgent fills outcomes, ReportAgent
    fills report.
    """

    # ---------------------------------------------------------------------
    # RUN INPUT
    # ---------------------------------------------------------------------
    corpus_descriptor: str       # e.g. "n=6 dedup" or a file path
    corpus: Iterable[Any]        # Graphs or StreamRecords, consumed once
    invariant: str               # one of INVARIANTS
    workers: int                 # process fan-out; 1 runs in-process
    node_limit: Optional[int]
    time_limit_ms: Optional[int]
    max_n: int                   # larger graphs are recorded as malformed
    timing: bool                 # include elapsed_ms in the report

    # ---------------------------------------------------------------------
    # CORPUS (SET BY CorpusAgent)
    # ---------------------------------------------------------------------
    records: List[CorpusRecord]
    stopped_at: Optional[int]    # position of the record that stopped a strict stream

    # ---------------------------------------------------------------------
    # CHECKS (SET BY VerifierAgent)
    # ---------------------------------------------------------------------
    outcomes: List[CheckOutcome]

    # ---------------------------------------------------------------------
    # REPORT (SET BY ReportAgent)
    # ---------------------------------------------------------------------
    report: Optional[VerificationReport]

    current_agent: str
    workflow_status: str
    error_log: List[str]
    start_time: float


# ---------------------------------------------------------------------------
# Run configuration
# ---------------------------------------------------------------------------

ENV_MAX_N = "FOLKMAN_MAX_N"
ENV_TIME_LIMIT_MS = "FOLKMAN_TIME_LIMIT_MS"
ENV_NODE_LIMIT = "FOLKMAN_NODE_LIMIT"
ENV_WORKERS = "FOLKMAN_WORKERS"

_ENV_FIELDS = {
    "max_n": ENV_MAX_N,
    "time_limit_ms": ENV_TIME_LIMIT_MS,
    "node_limit": ENV_NODE_LIMIT,
    "workers": ENV_WORKERS,
}


class RunConfig(BaseModel):
    """
    Validated settings for one CLI run.

    Flags win over environment variables, which win over the defaults.
    """
    command: str
    action: Optional[str] = None
    input_path: Optional[str] = None
    input_format: Literal["graph6", "dimacs", "edgelist"] = "graph6"
    strict: bool = False
    max_n: int = Field(default=MAX_VERTICES, ge=0)
    time_limit_ms: Optional[int] = Field(default=None, ge=0)
    node_limit: Optional[int] = Field(default=None, ge=0)
    workers: int = Field(default=1, ge=1)
    output: Literal["text", "structured"] = "text"
    timing: bool = False
    params: Dict[str, Any] = Field(default_factory=dict)

    @field_validator("max_n")
    @classmethod
    def _within_vertex_cap(cls, value: int) -> int:
        if value > MAX_VERTICES:
            raise ValueError(f"max_n {value} exceeds the vertex cap {MAX_VERTICES}")
        return value

    @classmethod
    def from_sources(cls, flags: Mapping[str, Any], environ: Optional[Mapping[str, str]] = None) -> "RunConfig":
        """Merge flag values (None means unset) over FOLKMAN_* variables."""
        environ = os.environ if environ is None else environ
        merged = {key: value for key, value in flags.items() if value is not None}
        for name, var in _ENV_FIELDS.items():
            if name not in merged and environ.get(var, "").strip():
                merged[name] = environ[var].strip()
        return cls(**merged)

    @property
    def budget(self) -> SolverBudget:
        return SolverBudget(node_limit=self.node_limit, time_limit_ms=self.time_limit_ms)
