"""
Error kinds shared by every kernel in the tools package.

Kernels raise these; agents and the CLI decide whether a failure is fatal,
a skipped record or a usage error.

Author: Graph Invariants Team
Date: 2026-10-19
"""

from typing import Any, Optional


class FolkmanError(Exception):
    """Base class for all workbench errors."""


class MalformedInput(FolkmanError):
    """Input text or parameters do not describe a valid simple graph."""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"line {position}: {message}"
        super().__init__(message)


class PreconditionViolated(FolkmanError):
    """An operation was called outside the structural hypotheses it documents."""


class SizeCapExceeded(FolkmanError):
    """The instance is larger than the cap configured for this operation."""

    def __init__(self, what: str, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")


class BudgetExceeded(FolkmanError):
    """
    A search ran out of nodes or wall time.

    Attributes:
        best_bound: best value found before the budget ran out (if any)
        bounds: (lower, upper) bracket for optimisation problems
    """

    def __init__(self, message: str, best_bound: Any = None, bounds: Optional[tuple] = None):
        self.best_bound = best_bound
        self.bounds = bounds
        super().__init__(message)
