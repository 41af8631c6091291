"""Exception types shared across the package."""


class InvalidPrimeError(ValueError):
    """The modulus is smaller than 2 or composite."""


class ContextMismatchError(ValueError):
    """Two elements from different algebra contexts were combined."""


class UnsupportedCharacteristicError(ValueError):
    """A characteristic-3 construction was requested at some other prime."""
