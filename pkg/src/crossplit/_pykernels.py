"""Pure-numpy fallback implementations of the hot kernels.

Semantics are identical to the compiled backend in ``_ckernels``; prefix sums
run in extended precision so segment means stay accurate enough for the
1e-12 exactness guarantees on the split point.
"""

from __future__ import annotations

import math

import numpy as np

NAME = "python"


def _segment_prefix(xs: np.ndarray):
    """Segment boundaries of a sorted array: last index of each run but the
    final one, cumulative sums in extended precision."""
    ps = np.cumsum(xs.astype(np.longdouble))
    ends = np.flatnonzero(xs[:-1] < xs[1:])
    return ps, ends


def split_point_sorted(xs: np.ndarray) -> float:
    """Rightmost zero of the sample cross-over function of a sorted array.

    Returns the exact supremum of {t : T_n(t) >= 0}; ``nan`` when the array
    has fewer than two distinct values, ``-inf`` when T_n is negative on the
    whole domain (not reachable for valid samples, kept for totality).
    """
    n = xs.size
    if n < 2:
        return math.nan
    ps, ends = _segment_prefix(xs)
    if ends.size == 0:
        return math.nan
    total = ps[-1]
    cnt = ends + 1
    icpt = ps[ends] / cnt + (total - ps[ends]) / (n - cnt)
    t_left = np.asarray(icpt - 2.0 * xs[ends], dtype=np.float64)
    nonneg = np.flatnonzero(t_left >= 0.0)
    if nonneg.size == 0:
        return -math.inf
    k = int(nonneg[-1])
    zero = float(icpt[k] / 2.0)
    right = float(xs[ends[k] + 1])
    return zero if zero < right else right


def segment_intercepts_sorted(xs: np.ndarray):
    """Distinct order statistics and per-segment intercepts of T_n.

    Returns ``(breakpoints, intercepts)`` where ``breakpoints`` holds the m
    distinct values and ``intercepts[k]`` is the constant A_k + B_k on
    [breakpoints[k], breakpoints[k+1]).
    """
    n = xs.size
    ps, ends = _segment_prefix(xs)
    breakpoints = np.concatenate([xs[ends], xs[-1:]])
    cnt = ends + 1
    total = ps[-1]
    icpt = ps[ends] / cnt + (total - ps[ends]) / (n - cnt)
    return breakpoints, np.asarray(icpt, dtype=np.float64)


def bartlett_lrv(x: np.ndarray, bandwidth: int) -> float:
    """Bartlett lag-window long-run variance of a series.

    gamma_0 + 2 * sum_{j=1..b} (1 - j/(b+1)) gamma_j with biased (1/n)
    mean-centered sample autocovariances.
    """
    n = x.size
    c = np.asarray(x, dtype=np.float64) - np.mean(x)
    acc = float(c @ c) / n
    for j in range(1, bandwidth + 1):
        gamma = float(c[j:] @ c[:-j]) / n
        acc += 2.0 * (1.0 - j / (bandwidth + 1.0)) * gamma
    return acc
