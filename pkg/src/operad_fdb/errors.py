"""Exception types shared across the package."""


class OperadError(Exception):
    """Base class for every error raised by this package."""


class ModeMismatch(OperadError):
    """Operands live in different ambient modes."""


class CapMismatch(OperadError):
    """Operands carry different truncation windows."""


class IllegalProduct(OperadError):
    """Product not available in this ambient mode (identity/pointed)."""


class UnknownObject(OperadError):
    """Object not present in the groupoid."""


class NotAnAction(OperadError):
    """The supplied map is not a right group action."""


class UnknownOperation(OperadError):
    """Operation not present in the operad table."""


class WindowExceeded(OperadError):
    """A required composite falls outside the enumeration window."""


class EmptyColourSet(OperadError):
    """A colour set was empty where a nonempty one is required."""


class NotFiniteDecomposition(OperadError):
    """Monoid table cannot certify finitely many factorizations per element."""


class OracleScaleExceeded(OperadError):
    """Brute-force oracle asked to run beyond its intended scale."""


class CompletedSeriesCounit(OperadError):
    """Counit applied to a completed (window-truncated infinite) series."""


class BadSpecFile(OperadError):
    """Operad spec file violates the schema; carries a JSON-pointer location."""

    def __init__(self, message, location="/"):
        super().__init__("%s: %s" % (location, message))
        self.location = location


class UnknownBuiltin(OperadError):
    """No built-in operad registered under that name."""
