"""
Agents package for the batch verification workflow.

CorpusAgent materialises the corpus, VerifierAgent runs the per-graph
invariant checks, ReportAgent aggregates the VerificationReport.
"""

from .corpus_agent import CorpusAgent
from .verifier_agent import INVARIANT_CHECKS, VerifierAgent, run_check
from .report_agent import ReportAgent

__all__ = [
    "CorpusAgent",
    "VerifierAgent",
    "ReportAgent",
    "INVARIANT_CHECKS",
    "run_check",
]
