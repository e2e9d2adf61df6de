"""Exception types shared across the package."""


class MorsegpsError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgumentError(MorsegpsError, ValueError):
    """An argument is outside the accepted set (wrong sign, non-finite, bad index)."""


class DomainError(MorsegpsError, ValueError):
    """A coordinate lies outside the function's domain (x not in [-1, 1], r <= 0)."""


class MoleculeNotFoundError(MorsegpsError, LookupError):
    """Unknown molecule name; the message lists the valid built-ins."""


class ParamsFileError(MorsegpsError, ValueError):
    """A molecule parameter file failed to parse; the message carries the line number."""


class NumericalError(MorsegpsError, RuntimeError):
    """An iterative numerical procedure failed to converge or verify."""


class NoSuchBoundStateError(MorsegpsError, ValueError):
    """Requested vibrational index has no bound state.

    Carries ``max_n``, the largest valid index (-1 if the well holds none).
    """

    def __init__(self, message, max_n):
        super().__init__(message)
        self.max_n = max_n


class BracketError(MorsegpsError, ValueError):
    """An energy bracket does not contain the requested state."""
