"""Exceptions shared across the package."""


class TreeError(ValueError):
    """Structurally invalid tree data.

    `reason` is a stable machine-readable tag identifying the failure mode
    (e.g. "edge-count", "vertex-id", "self-loop", "duplicate-edge",
    "disconnected", "order", "edge", "classification").
    """

    def __init__(self, message: str, reason: str = "invalid"):
        super().__init__(message)
        self.reason = reason


class TreeFormatError(TreeError):
    """Tree-file text that cannot be parsed into a valid tree."""


class BudgetExceededError(RuntimeError):
    """A request exceeds a configured enumeration or generation budget."""
