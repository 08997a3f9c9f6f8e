"""Exception types shared across the package."""


class StructureError(ValueError):
    """A table is malformed: wrong shape or an out-of-range entry."""


class PreconditionError(ValueError):
    """An operation was called on an algebra outside its domain."""


class ResourceLimitError(RuntimeError):
    """The requested computation exceeds a desk-scale budget."""


class Falsification(Exception):
    """A claimed structural fact failed on a concrete algebra.

    ``witness`` carries the offending element tuple, pair or partition.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
