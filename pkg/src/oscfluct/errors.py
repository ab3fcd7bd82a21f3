"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An input failed a documented precondition (non-finite, wrong sign, ...)."""


class DomainError(ValueError):
    """A mathematically valid input lies outside the domain of a density."""


class HermiteOverflowError(OverflowError):
    """Raw Hermite polynomial values exceeded float64 range.

    Raised instead of returning inf/nan. The normalized oscillator
    eigenfunctions stay bounded at any order, so the fix is to call
    ``hermite_function`` rather than building densities from raw ``hermite``.
    """


class TruncationCapError(RuntimeError):
    """The occupation-weight cutoff cap was hit before the tail bound was met.

    Carries ``achievable_tail`` so callers can decide whether the looser
    truncation is acceptable.
    """

    def __init__(self, message: str, achievable_tail: float):
        super().__init__(message)
        self.achievable_tail = achievable_tail


class QuadratureError(RuntimeError):
    """Adaptive quadrature hit its depth limit before reaching tolerance.

    ``best_estimate`` holds the deepest-refinement value so diagnostics can
    still report a number alongside the failure.
    """

    def __init__(self, message: str, best_estimate: float):
        super().__init__(message)
        self.best_estimate = best_estimate
