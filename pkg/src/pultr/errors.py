"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A construction was called with invalid parameters."""


class SizeGuardError(RuntimeError):
    """A construction would exceed the configured size guard."""

    def __init__(self, estimate, limit, what="construction"):
        self.estimate = estimate
        self.limit = limit
        self.what = what
        super().__init__(
            f"{what} would reach ~{estimate} vertices+arcs, over the size "
            f"guard of {limit}; raise the guard to proceed"
        )


class BudgetExceededError(RuntimeError):
    """A search exceeded its node budget.  Never silently degrades to a
    wrong answer; callers must treat this as "unknown"."""

    def __init__(self, decisions, progress=None):
        self.decisions = decisions
        self.progress = progress
        msg = f"search budget exceeded after {decisions} decisions"
        if progress is not None:
            msg += f" (progress: {progress})"
        super().__init__(msg)


class ParseError(ValueError):
    """Malformed graph / template / witness text."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
