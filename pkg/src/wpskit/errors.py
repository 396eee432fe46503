"""Exception hierarchy shared by all modules.

Messages that the original worksheet prints verbatim are kept verbatim.
"""


class WpsError(Exception):
    """Base class for domain errors (input is well formed but not a wps object)."""


class NotAWpsFan(WpsError):
    def __init__(self, message: str = "It is not a fan of a WPS"):
        super().__init__(message)


class NotAdmissible(WpsError):
    def __init__(self, message: str = "It is not an admissible polytope"):
        super().__init__(message)


class NotEquivalent(WpsError):
    pass


class NegativeLevel(ValueError):
    """Raised for negative cohomological degree q or form degree p."""


class InvalidWeights(ValueError):
    pass


class SingularMatrixError(ValueError):
    pass


class EnumerationBudgetExceeded(RuntimeError):
    def __init__(self, cells: int, budget: int):
        super().__init__(f"bounding box has {cells} cells, budget is {budget}")
        self.cells = cells
        self.budget = budget


class InternalConsistencyError(RuntimeError):
    """An exact identity guaranteed by the theory failed to hold."""
