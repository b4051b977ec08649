"""Exception types shared across the package."""


class CrossplitError(Exception):
    """Base class for all crossplit-specific errors."""


class DomainError(CrossplitError, ValueError):
    """Evaluation point outside the valid domain (e.g. F(t) in {0, 1})."""


class DegenerateSampleError(CrossplitError, ValueError):
    """Sample admits no nondegenerate split (fewer than two distinct values)."""


class IntegrationError(CrossplitError, ArithmeticError):
    """Numerical integration failed to meet the requested tolerance."""
