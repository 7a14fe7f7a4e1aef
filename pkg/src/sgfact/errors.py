"""Exception types shared across the package."""


class SgfactError(Exception):
    """Base class for all errors raised by this package."""


class ConstructionError(SgfactError, ValueError):
    """Invalid input while building a semigroup, system, or other object."""


class DimensionMismatchError(SgfactError, ValueError):
    """Operands whose dimensions are required to agree do not."""


class NotInSemigroupError(SgfactError, ValueError):
    """An element-level operation was asked about a non-member."""


class NotFullError(SgfactError, ValueError):
    """An operation that requires a full semigroup received a plain one."""


class UnsupportedDimensionError(SgfactError, ValueError):
    """An operation restricted to numerical semigroups got dimension > 1."""


class ResourceLimitError(SgfactError, RuntimeError):
    """A completion loop exceeded the configured step budget."""

    def __init__(self, steps: int):
        super().__init__(f"step budget of {steps} exceeded")
        self.steps = steps
