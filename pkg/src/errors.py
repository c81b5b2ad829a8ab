"""Exception hierarchy shared by the library and the CLI."""


class MajidError(Exception):
    """Base class for every error raised by this package."""


class InvalidInputError(MajidError, ValueError):
    """Malformed or out-of-range input (shapes, moduli, JSON fields)."""


class BudgetExceededError(MajidError):
    """An exhaustive loop would exceed the configured tuple budget."""

    def __init__(self, required: int, budget: int, what: str = "exhaustive check"):
        self.required = required
        self.budget = budget
        super().__init__(
            f"{what} needs {required} tuples, budget is {budget}; "
            f"raise it with --budget or MAJID_BUDGET"
        )


class PreconditionError(MajidError):
    """A documented precondition of an operation does not hold."""


class ConstructionError(MajidError):
    """A root-datum construction cannot be carried out."""


class ClassificationError(MajidError):
    """No cohomology class matches the given cochain."""
