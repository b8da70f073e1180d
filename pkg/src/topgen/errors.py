"""Exception hierarchy shared across the package."""

from __future__ import annotations


class TopgenError(Exception):
    """Base class for all errors raised by topgen."""


class InvalidGroupType(TopgenError, ValueError):
    """A (family, rank) pair that is not a Dynkin type, or an unsupported group."""


class NotCurated(TopgenError, KeyError):
    """The requested row is not present in the curated data store."""

    def __str__(self) -> str:  # KeyError quotes its message otherwise
        return str(self.args[0]) if self.args else "not curated"


class BudgetExceeded(TopgenError):
    """A brute-force enumeration would exceed the configured work budget."""

    def __init__(self, required: int, budget: int) -> None:
        self.required = required
        self.budget = budget
        super().__init__(
            f"brute-force enumeration needs r^rank * |roots| = {required} "
            f"operations, budget is {budget}"
        )


class InconsistentDimensions(TopgenError, ValueError):
    """Dimension inputs that cannot come from a genuine fixed point computation."""


class InvalidOrder(TopgenError, ValueError):
    """An element order or prime outside the supported range."""
