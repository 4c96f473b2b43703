"""Exception types shared across the package."""


class PoleProximityError(ValueError):
    """An evaluation point is too close to a pole to trust the result."""


class PrincipalCharacterError(ValueError):
    """L-series of a principal character was requested (pole at s=1, out of scope)."""


class TailCertificationError(RuntimeError):
    """A truncation tail could not be certified below tolerance within resource limits."""


class InvariantViolationError(RuntimeError):
    """Computed data contradicts a property that is guaranteed to hold.

    Raised e.g. for a negative Dirichlet coefficient of the four-factor
    product, a non-positive L(1, chi), or zeta(sigma) >= 0 on 0 < sigma < 1.
    Any occurrence indicates a bug, not a bad input.
    """


class ErrorBudgetError(RuntimeError):
    """A certified error bound exceeds the caller's budget; message names the dominant term."""
