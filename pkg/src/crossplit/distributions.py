"""Analytic distribution models used by the theoretical criterion functions.

A model supplies the CDF, density, quantile function, support endpoints and
the truncated first moments

    lower_truncated_moment(t) = integral of x dF over (-inf, t]
    upper_truncated_moment(t) = integral of x dF over (t, inf)

The base class evaluates the truncated moments by adaptive quadrature so that
a new model only has to provide cdf/pdf/quantile; models with closed forms
(the standard normal below) override them.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod

from scipy import integrate
from scipy.special import ndtr, ndtri

__all__ = ["DistributionModel", "StandardNormalModel", "standard_normal_model"]

_MOMENT_ABS_TOL = 1e-10
_SQRT_2PI = math.sqrt(2.0 * math.pi)


class DistributionModel(ABC):
    """Analytic distribution with invertible CDF and unit-scale normalization.

    Implementations are expected to be standardized (zero mean, unit second
    moment); the theoretical split-point results rely on an invertible,
    twice-differentiable CDF.
    """

    #: support endpoints; may be +-inf
    x_minus: float = -math.inf
    x_plus: float = math.inf

    @abstractmethod
    def cdf(self, t: float) -> float: ...

    @abstractmethod
    def pdf(self, t: float) -> float: ...

    @abstractmethod
    def quantile(self, p: float) -> float: ...

    @property
    def mean(self) -> float:
        t = self.quantile(0.5)
        return self.lower_truncated_moment(t) + self.upper_truncated_moment(t)

    def _integration_bracket(self) -> tuple[float, float]:
        lo = self.x_minus if math.isfinite(self.x_minus) else self.quantile(1e-14)
        hi = self.x_plus if math.isfinite(self.x_plus) else self.quantile(1 - 1e-14)
        return lo, hi

    def lower_truncated_moment(self, t: float) -> float:
        lo, _ = self._integration_bracket()
        if t <= lo:
            return 0.0
        val, _err = integrate.quad(
            lambda x: x * self.pdf(x), lo, t, epsabs=_MOMENT_ABS_TOL, limit=200
        )
        return val

    def upper_truncated_moment(self, t: float) -> float:
        _, hi = self._integration_bracket()
        if t >= hi:
            return 0.0
        val, _err = integrate.quad(
            lambda x: x * self.pdf(x), t, hi, epsabs=_MOMENT_ABS_TOL, limit=200
        )
        return val


class StandardNormalModel(DistributionModel):
    """Standard normal with closed-form truncated moments.

    The first-moment identities integral x phi(x) dx = -phi(t) (lower tail)
    and +phi(t) (upper tail) avoid quadrature entirely.
    """

    x_minus = -math.inf
    x_plus = math.inf

    def cdf(self, t: float) -> float:
        return float(ndtr(t))

    def pdf(self, t: float) -> float:
        return math.exp(-0.5 * t * t) / _SQRT_2PI

    def quantile(self, p: float) -> float:
        if not 0.0 < p < 1.0:
            raise ValueError(f"quantile defined on (0, 1), got {p}")
        return float(ndtri(p))

    @property
    def mean(self) -> float:
        return 0.0

    def lower_truncated_moment(self, t: float) -> float:
        return -self.pdf(t)

    def upper_truncated_moment(self, t: float) -> float:
        return self.pdf(t)


def standard_normal_model() -> StandardNormalModel:
    """The standardized reference model (mean 0, variance 1)."""
    return StandardNormalModel()
