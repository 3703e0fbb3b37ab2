"""
Corpus Agent for materialising the graph corpus of a verification run.

Consumes the corpus iterable once (enumerated graphs or a GraphStream),
encodes every graph as graph6 so records can cross process boundaries, and
keeps malformed records in place so positions stay aligned.

Author: Graph Invariants Team
Date: 2026-10-19
"""

import sys
from typing import Optional

from state import CorpusRecord, VerificationState
from tools.errors import FolkmanError
from tools.graph_core import Graph
from tools.graph_io import GraphStream, StreamRecord, write_graph6


class CorpusAgent:
    """Turns the corpus iterable into an ordered list of CorpusRecords."""

    def __init__(self):
        print("[OK] CorpusAgent initialized", file=sys.stderr)

    async def __call__(self, state: VerificationState) -> VerificationState:
        """
        Materialise the corpus.

        Graphs above state["max_n"] become malformed records. In strict
        streams the first bad record raises inside the iterable; the error is
        logged and the run is marked failed.

        Args:
            state: workflow state with corpus and max_n set

        Returns:
            state with records populated
        """
        records = []
        try:
            for index, item in enumerate(state["corpus"], 1):
                records.append(self._record(index, item, state["max_n"]))
        except FolkmanError as e:
            state["error_log"].append(str(e))
            state["workflow_status"] = "corpus_failed"
            state["stopped_at"] = self._stop_position(state["corpus"], e)
            print(f"[ERROR] {e}", file=sys.stderr)

        state["records"] = records
        state["current_agent"] = "corpus"
        if state["workflow_status"] != "corpus_failed":
            state["workflow_status"] = "corpus_ready"
        bad = sum(1 for r in records if r["graph6"] is None)
        print(f"[Corpus] {state['corpus_descriptor']}: {len(records)} records, {bad} malformed", file=sys.stderr)
        return state

    @staticmethod
    def _record(index: int, item, max_n: int) -> CorpusRecord:
        if isinstance(item, StreamRecord):
            if not item.ok:
                return {"position": item.position, "graph6": None, "error": str(item.error)}
            position, graph = item.position, item.graph
        elif isinstance(item, Graph):
            position, graph = index, item
        else:
            return {"position": index, "graph6": None, "error": f"unsupported corpus item {type(item).__name__}"}
        if graph.n > max_n:
            return {"position": position, "graph6": None, "error": f"line {position}: n = {graph.n} above max-n {max_n}"}
        return {"position": position, "graph6": write_graph6(graph), "error": None}

    @staticmethod
    def _stop_position(corpus, error: FolkmanError) -> Optional[int]:
        """
        Where a strict stream stopped: the line when known, else the record
        count. None when no record was at fault.
        """
        position = getattr(error, "position", None)
        if position is None and isinstance(corpus, GraphStream):
            position = corpus.position
        return position
