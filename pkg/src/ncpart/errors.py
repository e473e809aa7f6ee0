"""Exception hierarchy shared by all modules.

Every error a caller can trigger with bad input derives from ``ValueError`` so
the CLI can map the whole family onto a usage exit status.
"""


class NCPartError(ValueError):
    """Base class for input errors raised by this package."""


class PartitionError(NCPartError):
    pass


class PartitionSyntaxError(PartitionError):
    pass


class DuplicateElementError(PartitionError):
    pass


class ElementRangeError(PartitionError):
    pass


class MissingElementError(PartitionError):
    pass


class EmptyBlockError(PartitionError):
    pass


class NotNoncrossingError(NCPartError):
    pass


class NotSelfComplementaryError(NCPartError):
    pass


class NotAchiralError(NCPartError):
    pass


class PathError(NCPartError):
    pass


class TreeError(NCPartError):
    pass


class BudgetExceededError(NCPartError):
    """Raised when a brute-force request is larger than its documented budget."""
