"""Observation containers: ordered samples and the empirical CDF.

A :class:`Sample` keeps both the observations in their original order (the
order carries the dependence structure of the series) and a sorted copy used
by the split-point machinery.  Both arrays are frozen after construction so
samples can be shared freely across threads.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateSampleError, DomainError

__all__ = ["Sample", "EmpiricalCdf", "empirical_cdf_eval", "load_sample_csv"]


@dataclass(frozen=True)
class Sample:
    """A univariate sample with its order statistics.

    ``values`` preserves observation order; ``sorted_values`` is the
    nondecreasing rearrangement.  All entries must be finite.
    """

    values: np.ndarray
    sorted_values: np.ndarray = field(repr=False)

    @classmethod
    def from_values(cls, values) -> "Sample":
        arr = np.asarray(values, dtype=np.float64)
        if arr.ndim != 1:
            raise DomainError("sample values must be one-dimensional")
        if arr.size < 1:
            raise DegenerateSampleError("sample must contain at least one observation")
        if not np.all(np.isfinite(arr)):
            raise DomainError("sample values must be finite (no NaN or infinity)")
        arr = arr.copy()
        srt = np.sort(arr)
        arr.setflags(write=False)
        srt.setflags(write=False)
        return cls(values=arr, sorted_values=srt)

    @property
    def n(self) -> int:
        return int(self.values.size)

    @property
    def min(self) -> float:
        return float(self.sorted_values[0])

    @property
    def max(self) -> float:
        return float(self.sorted_values[-1])

    def n_distinct(self) -> int:
        srt = self.sorted_values
        if srt.size == 0:
            return 0
        return 1 + int(np.count_nonzero(srt[1:] > srt[:-1]))


def empirical_cdf_eval(sample: Sample, t: float) -> float:
    """F_n(t) = (number of observations <= t) / n.

    Right-continuous step function; total on finite ``t``.
    """
    k = int(np.searchsorted(sample.sorted_values, t, side="right"))
    return k / sample.n


@dataclass(frozen=True)
class EmpiricalCdf:
    """Callable empirical distribution function of a sample."""

    sample: Sample

    def __call__(self, t):
        srt = self.sample.sorted_values
        k = np.searchsorted(srt, t, side="right")
        out = k / self.sample.n
        if np.ndim(t) == 0:
            return float(out)
        return out


def _parse_line(text: str) -> float:
    # float() is locale-independent: the decimal separator is always '.'
    return float(text)


def load_sample_csv(path: str | os.PathLike) -> Sample:
    """Read a sample from a CSV file with one real number per line.

    A non-numeric first line is treated as a header and skipped; blank lines
    are ignored.  Raises ``ValueError`` on any other non-numeric content.
    """
    values: list[float] = []
    with open(path, "r", encoding="utf-8") as fh:
        first_data_line = True
        for lineno, raw in enumerate(fh, start=1):
            text = raw.strip()
            if not text:
                continue
            try:
                value = _parse_line(text)
            except ValueError:
                if first_data_line:
                    first_data_line = False
                    continue  # header
                raise ValueError(
                    f"{path}: line {lineno}: not a number: {text!r}"
                ) from None
            first_data_line = False
            values.append(value)
    if not values:
        raise ValueError(f"{path}: no numeric data found")
    return Sample.from_values(values)
