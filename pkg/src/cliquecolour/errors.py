"""Shared error types.

The CLI maps these onto exit codes: parameter and parse problems exit with 2,
an exhausted search budget on a required computation exits with 3.
"""

from __future__ import annotations


class ParameterError(ValueError):
    """An argument violates a precondition (bad range, wrong combination)."""


class EdgeListParseError(ParameterError):
    """An edge-list byte stream is malformed.  Carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class CliqueOverflowError(RuntimeError):
    """Clique enumeration exceeded its configured output budget."""

    def __init__(self, max_count: int):
        super().__init__(f"more than {max_count} maximal cliques; raise max_count to proceed")
        self.max_count = max_count


class BudgetExceededError(RuntimeError):
    """An exact search ran out of time.  Best bounds known at abort are attached.

    ``lower`` and ``upper`` bracket the true answer; either may be None when
    the search aborted before establishing that side.
    """

    def __init__(self, what: str, lower=None, upper=None):
        bounds = f" (lower={lower}, upper={upper})"
        super().__init__(f"budget exhausted during {what}{bounds}")
        self.what = what
        self.lower = lower
        self.upper = upper
