"""Exception types raised by linecross.

Every error carries its class name in ``str(err)`` so that the CLI can
report e.g. ``InvalidDigit`` verbatim.
"""


class LinecrossError(ValueError):
    """Base class for all domain errors."""

    def __str__(self):
        msg = super().__str__()
        return f"{type(self).__name__}: {msg}" if msg else type(self).__name__


class EmptyInput(LinecrossError):
    pass


class InvalidDigit(LinecrossError):
    pass


class InvalidBase(LinecrossError):
    pass


class BaseMismatch(LinecrossError):
    pass


class InvalidConfig(LinecrossError):
    pass
