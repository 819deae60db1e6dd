"""Exception hierarchy shared by every module of the package."""


class BispinorError(Exception):
    """Base class for all errors raised by :mod:`bispinor`."""


# -- linear algebra ---------------------------------------------------------

class NonFinite(BispinorError, ValueError):
    pass


class NotHermitian(BispinorError, ValueError):
    pass


class NoConvergence(BispinorError, ArithmeticError):
    pass


class NegativeSpectrum(BispinorError, ValueError):
    pass


# -- Hamiltonian / ansatz ---------------------------------------------------

class NotTraceless(BispinorError, ValueError):
    pass


class DegenerateEnergy(BispinorError, ArithmeticError):
    """The energy parameter vanishes, so the density-matrix ansatz is singular."""


class UnsupportedConfiguration(BispinorError, ValueError):
    """The stationary ansatz does not apply (O is neither null nor an involution up to scale)."""


class ConstraintViolated(BispinorError, ValueError):
    """A closed-form case was requested outside the region where it holds."""


# -- states -----------------------------------------------------------------

class NotAState(BispinorError, ValueError):
    pass


class NotPure(BispinorError, ValueError):
    pass


class OutOfRange(BispinorError, ValueError):
    pass


# -- configuration files ----------------------------------------------------

class ConfigError(BispinorError, ValueError):
    """Base class for problems in a sweep configuration file."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class ParseError(ConfigError):
    pass


class UnknownKey(ConfigError):
    pass


class InvalidRange(ConfigError):
    pass
