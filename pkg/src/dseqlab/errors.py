"""Exception types shared across the package."""


class DseqError(Exception):
    """Base class for all library errors."""


class DomainError(DseqError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class CapacityError(DseqError, ValueError):
    """An argument exceeds a documented operating ceiling."""


class TerminatingExpansionError(DomainError):
    """The prime divides the base, so 1/p has a finite expansion and no period."""

    def __init__(self, p: int, base: int):
        super().__init__(f"terminating expansion: {p} divides base {base}")
        self.p = p
        self.base = base


class BudgetExceeded(DseqError):
    """A computation ran past its wall-clock budget."""
