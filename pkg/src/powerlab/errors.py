"""Exception types shared across the package."""


class PowerLabError(Exception):
    """Base class for all errors raised by powerlab."""


class InvalidGameError(PowerLabError, ValueError):
    """Input does not describe a valid simple game or representation."""


class InvalidInputError(PowerLabError, ValueError):
    """An argument is malformed (bad index id, bad scheme, bad file field)."""


class CapExceededError(PowerLabError):
    """A documented size cap (players, corpus size, search space) was exceeded."""
