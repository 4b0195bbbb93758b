"""Exception hierarchy shared by all modules."""


class DtwMeanError(Exception):
    """Base class for errors raised by this package."""


class SpaceMismatchError(DtwMeanError, ValueError):
    """An attribute does not belong to the configured attribute space."""


class InvalidPathError(DtwMeanError, ValueError):
    """A point sequence violates the warping-path conditions."""


class InvalidGraphError(DtwMeanError, ValueError):
    """An edge list is not a (compact) warping graph, or an operation's precondition on it fails."""


class CapExceededError(DtwMeanError, ValueError):
    """An exhaustive enumeration would exceed its configured cap."""


class UnsupportedProblemError(DtwMeanError, ValueError):
    """No exact solver applies to the given space/loss combination."""


class ReductionError(DtwMeanError, RuntimeError):
    """A reduction step increased the Frechet value beyond tolerance."""
