class InvariantViolation(RuntimeError):
    """Two routes to the same quantity disagreed; this is a bug, never bad input."""
