"""Seedable generators for stationary weakly dependent Gaussian sequences.

All three families are standardized to an N(0, 1) marginal: i.i.d. draws, an
m-dependent moving sum of independent innovations, and a stationary Gaussian
AR(1).  A counter-based bit generator (Philox) keyed by the spec's seed makes
every sequence reproducible independently of threading or call order.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy import signal

from .errors import DomainError
from .sample import Sample

__all__ = ["GeneratorKind", "GeneratorSpec", "generate"]

_SEED_MAX = 2**64


class GeneratorKind(enum.Enum):
    IID_NORMAL = "iid_normal"
    MOVING_SUM = "m_dependent_moving_sum"
    AR1 = "ar1_gaussian"


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters of one generated sequence.

    ``terms`` and ``innovation_variance`` apply to the moving sum (defaults:
    3 terms of variance 1/3, the 2-dependent benchmark case); ``rho`` applies
    to the AR(1).  ``terms * innovation_variance`` must equal 1 so the
    marginal stays standardized.
    """

    kind: GeneratorKind
    n: int
    seed: int
    terms: int = 3
    innovation_variance: float | None = None
    rho: float | None = None

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise DomainError(f"sequence length must be an integer >= 2, got {self.n!r}")
        if not isinstance(self.seed, int) or not 0 <= self.seed < _SEED_MAX:
            raise DomainError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        if self.kind is GeneratorKind.MOVING_SUM:
            if not isinstance(self.terms, int) or self.terms < 1:
                raise DomainError(f"terms must be a positive integer, got {self.terms!r}")
            var = self.innovation_variance
            if var is None:
                var = 1.0 / self.terms
                object.__setattr__(self, "innovation_variance", var)
            if not var > 0.0:
                raise DomainError(f"innovation variance must be positive, got {var!r}")
            if abs(self.terms * var - 1.0) > 1e-9:
                raise DomainError(
                    "terms * innovation_variance must equal 1 for a standardized marginal, "
                    f"got {self.terms} * {var!r}"
                )
        elif self.kind is GeneratorKind.AR1:
            if self.rho is None or not -1.0 < self.rho < 1.0:
                raise DomainError(f"AR(1) coefficient must lie in (-1, 1), got {self.rho!r}")


def generate(spec: GeneratorSpec) -> Sample:
    """Generate the sequence described by ``spec``.

    The moving sum draws n + terms - 1 innovations and emits windowed sums;
    the AR(1) starts from its stationary law (X_1 ~ N(0,1), innovation
    variance 1 - rho^2).
    """
    rng = np.random.Generator(np.random.Philox(spec.seed))
    if spec.kind is GeneratorKind.IID_NORMAL:
        values = rng.standard_normal(spec.n)
    elif spec.kind is GeneratorKind.MOVING_SUM:
        innovations = rng.standard_normal(spec.n + spec.terms - 1)
        innovations *= math.sqrt(spec.innovation_variance)
        values = np.convolve(innovations, np.ones(spec.terms), mode="valid")
    elif spec.kind is GeneratorKind.AR1:
        z = rng.standard_normal(spec.n)
        w = z * math.sqrt(1.0 - spec.rho * spec.rho)
        w[0] = z[0]
        values = signal.lfilter([1.0], [1.0, -spec.rho], w)
    else:  # pragma: no cover - enum is closed
        raise DomainError(f"unknown generator kind: {spec.kind!r}")
    return Sample.from_values(values)
