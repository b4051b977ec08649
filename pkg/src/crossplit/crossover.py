"""Cross-over criterion functions and the sample split point.

The theoretical criterion T(t) = L(t)/F(t) + U(t)/(1-F(t)) - 2t crosses zero
at the optimal two-cluster split of a distribution; its sample analogue T_n
replaces F with the empirical CDF and the truncated moments with truncated
sample means.  Between consecutive distinct order statistics T_n is affine
with slope exactly -2, which makes the supremum of {t : T_n(t) >= 0} exactly
computable by a right-to-left segment scan.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .distributions import DistributionModel
from .errors import DegenerateSampleError, DomainError
from .sample import Sample

__all__ = [
    "CrossoverCurve",
    "SplitOutcome",
    "SplitEstimate",
    "sample_crossover_eval",
    "build_crossover_curve",
    "sample_split_point",
    "theoretical_crossover",
    "theoretical_crossover_derivative",
    "split_function",
    "crossover_G",
]


def sample_crossover_eval(sample: Sample, t: float) -> float:
    """Evaluate T_n(t) by direct summation.

    This is the O(n) reference form: mean of the observations <= t, plus the
    mean of the rest, minus 2t.  Exact rounding via fsum so it can serve as
    an oracle for the segment representation.
    """
    t = float(t)
    xs = sample.sorted_values
    if t < xs[0] or t >= xs[-1]:
        raise DomainError(
            f"t={t!r} outside [{xs[0]!r}, {xs[-1]!r}): empirical CDF is 0 or 1"
        )
    k = int(np.searchsorted(xs, t, side="right"))
    lower = math.fsum(xs[:k])
    upper = math.fsum(xs[k:])
    return lower / k + upper / (sample.n - k) - 2.0 * t


@dataclass(frozen=True)
class CrossoverCurve:
    """Exact piecewise-affine representation of T_n.

    ``breakpoints`` holds the distinct order statistics d_0 < ... < d_{m-1};
    on segment [d_k, d_{k+1}) the curve is ``intercepts[k] - 2t`` where the
    intercept is A_k + B_k, the sum of the lower and upper truncated sample
    means.  The domain is [d_0, d_{m-1}).
    """

    breakpoints: np.ndarray
    intercepts: np.ndarray
    n: int

    @property
    def domain(self) -> tuple[float, float]:
        return float(self.breakpoints[0]), float(self.breakpoints[-1])

    def segment_index(self, t):
        idx = np.searchsorted(self.breakpoints, t, side="right") - 1
        lo, hi = self.domain
        if np.any(idx < 0) or np.any(idx >= self.breakpoints.size - 1):
            raise DomainError(f"evaluation point outside [{lo!r}, {hi!r})")
        return idx

    def __call__(self, t):
        scalar = np.isscalar(t) or np.ndim(t) == 0
        ts = np.atleast_1d(np.asarray(t, dtype=np.float64))
        idx = self.segment_index(ts)
        out = self.intercepts[idx] - 2.0 * ts
        return float(out[0]) if scalar else out


def build_crossover_curve(sample: Sample) -> CrossoverCurve:
    """Build the exact segment representation of T_n from one sort pass."""
    _require_splittable(sample)
    breakpoints, intercepts = _kernels.segment_intercepts_sorted(sample.sorted_values)
    breakpoints.setflags(write=False)
    intercepts.setflags(write=False)
    return CrossoverCurve(breakpoints=breakpoints, intercepts=intercepts, n=sample.n)


class SplitOutcome(enum.Enum):
    """Which branch of the split-point definition applied."""

    FINITE = "finite"
    ALL_NEGATIVE = "all_negative"
    ALL_POSITIVE = "all_positive"


@dataclass(frozen=True)
class SplitEstimate:
    """Sample split point t_n = sup{t : T_n(t) >= 0}.

    Sentinel branches are carried as an enumerated outcome; ``value`` is only
    set on the finite branch so infinities never leak into arithmetic.
    """

    outcome: SplitOutcome
    n: int
    value: float | None = None

    @property
    def crossed(self) -> bool:
        return self.outcome is SplitOutcome.FINITE

    @property
    def t_n(self) -> float:
        if self.value is None:
            raise DomainError(f"split point is a sentinel ({self.outcome.value})")
        return self.value


def sample_split_point(sample: Sample) -> SplitEstimate:
    """Exact supremum of {t : T_n(t) >= 0} via right-to-left segment scan.

    On segment k the zero of T_n is (A_k + B_k)/2; the rightmost segment
    whose left endpoint value is nonnegative carries the supremum, capped at
    the segment's right edge when the sign change happens at a jump.
    """
    _require_splittable(sample)
    t = _kernels.split_point_sorted(sample.sorted_values)
    if math.isnan(t):
        raise DegenerateSampleError("sample has fewer than two distinct values")
    if t == -math.inf:
        return SplitEstimate(outcome=SplitOutcome.ALL_NEGATIVE, n=sample.n)
    if t == math.inf:
        return SplitEstimate(outcome=SplitOutcome.ALL_POSITIVE, n=sample.n)
    return SplitEstimate(outcome=SplitOutcome.FINITE, n=sample.n, value=t)


def _require_splittable(sample: Sample) -> None:
    if sample.n < 2:
        raise DegenerateSampleError("need at least two observations")
    if sample.sorted_values[0] == sample.sorted_values[-1]:
        raise DegenerateSampleError("all values identical: no nondegenerate segment")


def theoretical_crossover(model: DistributionModel, t: float) -> float:
    """T(t) = L(t)/F(t) + U(t)/(1-F(t)) - 2t for an analytic model."""
    t = float(t)
    F = model.cdf(t)
    if not 0.0 < F < 1.0:
        raise DomainError(f"F({t!r}) = {F!r} is degenerate")
    L = model.lower_truncated_moment(t)
    U = model.upper_truncated_moment(t)
    return L / F + U / (1.0 - F) - 2.0 * t


def theoretical_crossover_derivative(model: DistributionModel, t: float) -> float:
    """T'(t) = t f/F - f L/F^2 - t f/(1-F) + f U/(1-F)^2 - 2."""
    t = float(t)
    F = model.cdf(t)
    if not 0.0 < F < 1.0:
        raise DomainError(f"F({t!r}) = {F!r} is degenerate")
    f = model.pdf(t)
    L = model.lower_truncated_moment(t)
    U = model.upper_truncated_moment(t)
    G = 1.0 - F
    return t * f / F - f * L / (F * F) - t * f / G + f * U / (G * G) - 2.0


def split_function(model: DistributionModel, p: float) -> float:
    """Between-cluster sum of squares B(Q, p) at split fraction p.

    B = p (L/p)^2 + (1-p) (U/(1-p))^2 - mean^2 with L, U the truncated
    moments at the p-quantile; maximized at the split point.
    """
    p = float(p)
    if not 0.0 < p < 1.0:
        raise DomainError(f"split fraction must lie in (0, 1), got {p!r}")
    q = model.quantile(p)
    L = model.lower_truncated_moment(q)
    U = model.upper_truncated_moment(q)
    mean = model.mean
    return L * L / p + U * U / (1.0 - p) - mean * mean


def crossover_G(model: DistributionModel, p: float) -> float:
    """Quantile-scale criterion G(p) = L(Q(p))/p + U(Q(p))/(1-p) - 2 Q(p).

    Satisfies G(p) = T(Q(p)); its zero marks the maximizer of the split
    function.
    """
    p = float(p)
    if not 0.0 < p < 1.0:
        raise DomainError(f"split fraction must lie in (0, 1), got {p!r}")
    q = model.quantile(p)
    L = model.lower_truncated_moment(q)
    U = model.upper_truncated_moment(q)
    return L / p + U / (1.0 - p) - 2.0 * q
