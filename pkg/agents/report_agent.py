"""
Report Agent for aggregating check outcomes.

Author: Graph Invariants Team
Date: 2026-10-19
"""

import sys
import time

from state import VerificationReport, VerificationState


class ReportAgent:
    """Builds the VerificationReport from the ordered outcomes."""

    def __init__(self):
        print("[OK] ReportAgent initialized", file=sys.stderr)

    async def __call__(self, state: VerificationState) -> VerificationState:
        outcomes = state.get("outcomes") or []
        counts = {"pass": 0, "violation": 0, "vacuous": 0, "budget": 0, "malformed": 0}
        violations = []
        for outcome in outcomes:
            counts[outcome["status"]] += 1
            if outcome["status"] == "violation":
                violations.append({
                    "position": outcome["position"],
                    "graph6": outcome["graph6"],
                    "invariant": state["invariant"],
                    "values": outcome["values"],
                })
        # records that never reached the verifier (empty corpus or failed run)
        unreached = 0
        if not outcomes:
            records = state.get("records") or []
            counts["malformed"] = sum(1 for r in records if r["graph6"] is None)
            unreached = len(records) - counts["malformed"]
        if state.get("stopped_at") is not None:
            # the record that stopped a strict stream
            unreached += 1

        skipped = counts["budget"] + counts["malformed"]
        report: VerificationReport = {
            "corpus": state["corpus_descriptor"],
            "invariant": state["invariant"],
            "checked": counts["pass"] + counts["violation"] + counts["vacuous"],
            "skipped": skipped,
            "unreached": unreached,
            "vacuous": counts["vacuous"],
            "budget_exhausted": counts["budget"],
            "malformed": counts["malformed"],
            "violations": violations,
            "passed": not violations and not unreached,
            "elapsed_ms": None,
        }
        if state["timing"]:
            report["elapsed_ms"] = round((time.monotonic() - state["start_time"]) * 1000.0, 3)

        state["report"] = report
        state["current_agent"] = "report"
        if state["workflow_status"] not in ("corpus_failed", "verify_failed"):
            state["workflow_status"] = "completed"

        tag = "[OK]" if report["passed"] else "[ERROR]"
        print(f"{tag} {report['invariant']} on {report['corpus']}: {report['checked']} checked, "
              f"{len(violations)} violations, {skipped} skipped", file=sys.stderr)
        return state
