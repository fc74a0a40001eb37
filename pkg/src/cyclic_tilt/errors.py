"""Exception types shared across the package."""


class InvalidArgument(ValueError):
    """An operation was called outside its domain."""


class NotATriangulation(ValueError):
    """A face set or cell set does not describe a triangulation."""


class ExchangeObstruction(ValueError):
    """A tilting set is not a valid context for the requested exchange."""


class LimitExceeded(RuntimeError):
    """The backtracking budget ran out before the search finished."""

    def __init__(self, budget, what="search"):
        super().__init__(f"{what} exceeded budget of {budget} backtrack nodes")
        self.budget = budget
