"""Shared exception types."""


class QuadratureAccuracyError(ArithmeticError):
    """Raised when adaptive quadrature exhausts its subdivision budget.

    Carries the best estimate obtained so far in ``best_estimate`` and the
    estimated remaining error in ``error_estimate``.
    """

    def __init__(self, message, best_estimate, error_estimate):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.error_estimate = error_estimate
