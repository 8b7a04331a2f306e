"""Exception types raised across the package."""


class InvalidPermutation(ValueError):
    """Input is not a permutation of {1, ..., n}."""


class EmptyInput(InvalidPermutation):
    pass


class DuplicateValue(InvalidPermutation):
    pass


class OutOfRange(InvalidPermutation):
    pass


class NotCyclic(ValueError):
    """The permutation is not a single n-cycle."""


class DomainViolation(ValueError):
    """A cycle word lies outside the declared domain of a map."""


class InvalidPosition(ValueError):
    pass


class CapExceeded(ValueError):
    """Requested size exceeds the configured enumeration cap."""


class BelowRange(ValueError):
    """A closed form was evaluated below its valid range."""


class UnknownTheorem(KeyError):
    pass
