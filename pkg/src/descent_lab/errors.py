"""Exception hierarchy; each class maps onto one CLI exit code."""


class DescentLabError(Exception):
    """Base class for all library errors."""


class RankMismatchError(DescentLabError, ValueError):
    pass


class InvalidSubsetError(DescentLabError, ValueError):
    pass


class InvalidPartitionError(DescentLabError, ValueError):
    pass


class CapacityError(DescentLabError):
    """The requested rank exceeds what the chosen strategy supports."""


class ContractViolation(DescentLabError, ValueError):
    """A precondition on the arguments does not hold."""
