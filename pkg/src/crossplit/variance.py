"""Influence series, long-run variance, and the asymptotic variance of t_n.

The estimator's asymptotics are driven by the influence series
xi_t = (X - mu_l(t))/F(t) on {X <= t} and (X - mu_u(t))/(1 - F(t)) above;
its long-run variance sigma_t divided by T'(t_0)^2 is the CLT variance of
sqrt(n) (t_n - t_0).  sigma is computed analytically for m-dependent Gaussian
sequences by quadrature and from data by a Bartlett lag-window plug-in.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate
from scipy.special import ndtri

from . import _kernels, crossover
from .distributions import DistributionModel
from .errors import DegenerateSampleError, DomainError, IntegrationError
from .sample import Sample, empirical_cdf_eval

__all__ = [
    "InfluenceSeries",
    "influence_values",
    "default_bandwidth",
    "long_run_variance",
    "analytic_sigma_mdependent",
    "split_point_variance",
    "estimate_crossover_slope",
    "SplitInference",
    "split_confidence_interval",
]

_GAUSS_CUTOFF = 8.0  # Gaussian mass beyond +-8 is under 1e-15
_QUAD_TOL = 1e-6


@dataclass(frozen=True)
class InfluenceSeries:
    """Influence values xi_t^(i) with the moments used to build them."""

    t: float
    mu_l: float
    mu_u: float
    F_t: float
    values: np.ndarray


def _model_truncated_means(model: DistributionModel, t: float):
    F = model.cdf(t)
    if not 0.0 < F < 1.0:
        raise DomainError(f"F({t!r}) = {F!r} is degenerate")
    mu_l = model.lower_truncated_moment(t) / F
    mu_u = model.upper_truncated_moment(t) / (1.0 - F)
    return F, mu_l, mu_u


def influence_values(
    sample: Sample, t: float, model: DistributionModel | None = None
) -> InfluenceSeries:
    """Influence series of a sample at t.

    With ``model`` the population F and truncated means are used; otherwise
    everything is plugged in from the sample itself.
    """
    t = float(t)
    xs = sample.values
    below = xs <= t
    if model is not None:
        F, mu_l, mu_u = _model_truncated_means(model, t)
    else:
        F = empirical_cdf_eval(sample, t)
        if not 0.0 < F < 1.0:
            raise DomainError(
                f"empirical CDF at t={t!r} is {F!r}: no observations on one side"
            )
        mu_l = float(np.mean(xs[below]))
        mu_u = float(np.mean(xs[~below]))
    values = np.where(below, (xs - mu_l) / F, (xs - mu_u) / (1.0 - F))
    values.setflags(write=False)
    return InfluenceSeries(t=t, mu_l=mu_l, mu_u=mu_u, F_t=F, values=values)


def default_bandwidth(n: int) -> int:
    """Bartlett bandwidth floor(1.5 n^(1/3)) used when none is given."""
    # np.cbrt is correctly rounded; n ** (1/3) is not (1000 ** (1/3) < 10)
    return int(math.floor(1.5 * float(np.cbrt(n))))


def long_run_variance(
    sample: Sample,
    t: float | None = None,
    bandwidth: int | str = "auto",
) -> float:
    """Bartlett lag-window estimate of sigma_t from the plug-in influence series.

    When ``t`` is omitted the sample's own split point is used, matching how a
    confidence interval is built in practice.  ``bandwidth`` is the number of
    lags b in gamma_0 + 2 sum_{j<=b} (1 - j/(b+1)) gamma_j; "auto" selects
    floor(1.5 n^(1/3)).
    """
    if t is None:
        t = crossover.sample_split_point(sample).t_n
    if bandwidth == "auto":
        b = default_bandwidth(sample.n)
    else:
        if not isinstance(bandwidth, int) or isinstance(bandwidth, bool):
            raise DomainError(f"bandwidth must be an integer or 'auto', got {bandwidth!r}")
        b = bandwidth
    if b < 0:
        raise DomainError(f"bandwidth must be nonnegative, got {b}")
    if b >= sample.n:
        raise DomainError(f"bandwidth {b} must be smaller than the sample size {sample.n}")
    series = influence_values(sample, t)
    return float(_kernels.bartlett_lrv(np.ascontiguousarray(series.values), b))


def _binormal_pdf(x: float, y: float, rho: float) -> float:
    d = 1.0 - rho * rho
    q = (x * x - 2.0 * rho * x * y + y * y) / (2.0 * d)
    return math.exp(-q) / (2.0 * math.pi * math.sqrt(d))


def analytic_sigma_mdependent(
    model: DistributionModel, t: float, lag_covariances
) -> float:
    """Long-run variance sigma_t for an m-dependent Gaussian sequence.

    ``lag_covariances[k-1]`` is the lag-k autocovariance of the (standardized)
    sequence; the series E(xi^0)^2 + 2 sum_k E(xi^0 xi^k) has finitely many
    terms.  Each expectation is computed by adaptive quadrature against the
    (bivariate) normal density, split at the kink of xi.
    """
    t = float(t)
    F, mu_l, mu_u = _model_truncated_means(model, t)

    def xi(x: float) -> float:
        if x <= t:
            return (x - mu_l) / F
        return (x - mu_u) / (1.0 - F)

    err_budget = 0.0
    lo, hi = -_GAUSS_CUTOFF, _GAUSS_CUTOFF

    total = 0.0
    for a, b in ((lo, t), (t, hi)):
        val, err = integrate.quad(
            lambda x: xi(x) ** 2 * model.pdf(x), a, b, epsabs=1e-10, limit=200
        )
        total += val
        err_budget += err

    for rho in lag_covariances:
        rho = float(rho)
        if not -1.0 < rho < 1.0:
            raise DomainError(f"lag covariance must lie in (-1, 1), got {rho!r}")
        if rho == 0.0:
            continue  # independence: E(xi^0 xi^k) = (E xi)^2 = 0
        cross = 0.0
        for ax, bx in ((lo, t), (t, hi)):
            for ay, by in ((lo, t), (t, hi)):
                val, err = integrate.dblquad(
                    lambda y, x: xi(x) * xi(y) * _binormal_pdf(x, y, rho),
                    ax,
                    bx,
                    ay,
                    by,
                    epsabs=1e-8,
                )
                cross += val
                err_budget += err
        total += 2.0 * cross

    if err_budget > _QUAD_TOL:
        raise IntegrationError(
            f"quadrature error estimate {err_budget:.3e} exceeds {_QUAD_TOL:.0e}"
        )
    return total


def split_point_variance(sigma_t0: float, t_prime: float) -> float:
    """Asymptotic variance sigma_t0 / T'(t_0)^2 of sqrt(n) (t_n - t_0)."""
    if sigma_t0 < 0.0:
        raise DomainError(f"long-run variance must be nonnegative, got {sigma_t0!r}")
    if not t_prime < 0.0:
        raise DomainError(
            f"criterion slope at the split point must be negative, got {t_prime!r}"
        )
    return sigma_t0 / (t_prime * t_prime)


def estimate_crossover_slope(
    sample: Sample, t: float | None = None, window: float | None = None
) -> float:
    """Slope of the macroscopic trend of T_n near t.

    T_n itself has slope -2 on every segment; the informative slope of the
    underlying T emerges after smoothing over the jumps.  Fit a least-squares
    line to T_n at the segment midpoints within ``window`` of t (default
    window: sample std * n^(-1/5), widened until at least 8 midpoints are
    covered).
    """
    curve = crossover.build_crossover_curve(sample)
    if t is None:
        t = crossover.sample_split_point(sample).t_n
    mids = 0.5 * (curve.breakpoints[:-1] + curve.breakpoints[1:])
    if mids.size < 2:
        raise DegenerateSampleError("need at least two segments to estimate a slope")
    vals = curve.intercepts - 2.0 * mids
    if window is None:
        window = float(np.std(sample.values)) * sample.n ** (-0.2)
    dist = np.abs(mids - t)
    inside = dist <= window
    if int(inside.sum()) < min(8, mids.size):
        order = np.argsort(dist, kind="stable")
        inside = np.zeros(mids.size, dtype=bool)
        inside[order[: min(8, mids.size)]] = True
    x = mids[inside]
    y = vals[inside]
    xc = x - x.mean()
    denom = float(xc @ xc)
    if denom == 0.0:
        raise DegenerateSampleError("selected midpoints are collinear in t")
    return float(xc @ (y - y.mean())) / denom


@dataclass(frozen=True)
class SplitInference:
    """Split-point estimate with its plug-in confidence interval."""

    estimate: float
    level: float
    lower: float
    upper: float
    sigma: float
    slope: float
    n: int


def split_confidence_interval(
    sample: Sample,
    level: float = 0.95,
    bandwidth: int | str = "auto",
    model: DistributionModel | None = None,
) -> SplitInference:
    """Interval t_n +- z sqrt(sigma / slope^2 / n) from the plug-in pipeline.

    The slope is the model's analytic T' at t_n when a model is supplied,
    otherwise the smoothed sample slope.
    """
    if not 0.0 < level < 1.0:
        raise DomainError(f"confidence level must lie in (0, 1), got {level!r}")
    est = crossover.sample_split_point(sample)
    t = est.t_n
    sigma = long_run_variance(sample, t=t, bandwidth=bandwidth)
    if model is not None:
        slope = crossover.theoretical_crossover_derivative(model, t)
    else:
        slope = estimate_crossover_slope(sample, t=t)
    if not slope < 0.0:
        raise DomainError(
            f"estimated criterion slope {slope!r} is not negative; "
            "no interval under the CLT"
        )
    variance = split_point_variance(sigma, slope)
    z = float(ndtri(0.5 + level / 2.0))
    half = z * math.sqrt(variance / sample.n)
    return SplitInference(
        estimate=t,
        level=level,
        lower=t - half,
        upper=t + half,
        sigma=sigma,
        slope=slope,
        n=sample.n,
    )
