class MiddledomError(Exception):
    """Base class for library errors."""


class GraphError(MiddledomError, ValueError):
    """Invalid graph construction or query."""


class DisconnectedGraphError(GraphError):
    pass


class BudgetExceeded(MiddledomError, RuntimeError):
    """An exact search ran past its configured work budget."""


class NotApplicable(MiddledomError, ValueError):
    """Parameters fall outside a closed form's stated domain."""


class HypothesisViolation(MiddledomError, ValueError):
    """Input does not satisfy the hypotheses of a result being evaluated."""
