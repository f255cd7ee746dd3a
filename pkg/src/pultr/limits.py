"""Resource limits: construction size guard and search node budget.

The size guard bounds vertices+arcs of any single constructed graph
(the Omega and exponential constructions explode quickly).  The node
budget bounds backtracking decisions per engine call; exceeding it is an
error, never a guess.
"""

import math
import os
from contextlib import contextmanager

from .errors import SizeGuardError

DEFAULT_SIZE_GUARD = 2_000_000
DEFAULT_NODE_BUDGET = 100_000_000
BUDGET_ENV = "PULTR_BUDGET"

_size_guard = DEFAULT_SIZE_GUARD


def size_guard():
    return _size_guard


def set_size_guard(value):
    global _size_guard
    if value is None:
        value = math.inf
    _size_guard = value


@contextmanager
def guard_override(value):
    """Temporarily replace the size guard (math.inf disables it)."""
    global _size_guard
    old = _size_guard
    _size_guard = value
    try:
        yield
    finally:
        _size_guard = old


def check_size(estimate, what="construction"):
    """Raise SizeGuardError if the estimated vertices+arcs exceed the guard."""
    if estimate > _size_guard:
        raise SizeGuardError(estimate, _size_guard, what)


_budget_override = None


def set_default_budget(value):
    """Process-wide budget override; None restores env/default lookup."""
    global _budget_override
    _budget_override = value


def default_budget():
    if _budget_override is not None:
        return _budget_override
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_NODE_BUDGET
