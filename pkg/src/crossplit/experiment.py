"""Monte Carlo harness for the split-point sampling distribution.

Runs replicated estimation over a grid of sample sizes and reports the mean
and variance of sqrt(n) t_n per size.  Replicate seeds are derived from
(master_seed, n, replicate index) with a seed sequence, so reports are
bit-identical regardless of worker count or execution order.
"""

from __future__ import annotations

import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy import stats

from .crossover import sample_split_point
from .errors import DomainError
from .generators import GeneratorKind, GeneratorSpec, generate

__all__ = [
    "ExperimentConfig",
    "SizeSummary",
    "ExperimentReport",
    "derive_seed",
    "run_experiment",
    "normality_diagnostic",
]

REPORT_COLUMNS = ("n", "replicates_used", "sentinels", "mean_sqrt_n_tn", "var_sqrt_n_tn")


@dataclass(frozen=True)
class ExperimentConfig:
    """Generator template plus the replication plan."""

    kind: GeneratorKind
    sample_sizes: tuple[int, ...]
    replicates: int
    master_seed: int
    terms: int = 3
    innovation_variance: float | None = None
    rho: float | None = None

    def __post_init__(self):
        sizes = tuple(int(n) for n in self.sample_sizes)
        object.__setattr__(self, "sample_sizes", sizes)
        if not sizes or any(n < 2 for n in sizes):
            raise DomainError(f"sample sizes must all be >= 2, got {sizes!r}")
        if self.replicates < 2:
            raise DomainError(f"need at least 2 replicates, got {self.replicates!r}")

    def spec_for(self, n: int, replicate: int) -> GeneratorSpec:
        return GeneratorSpec(
            kind=self.kind,
            n=n,
            seed=derive_seed(self.master_seed, n, replicate),
            terms=self.terms,
            innovation_variance=self.innovation_variance,
            rho=self.rho,
        )


def derive_seed(master_seed: int, n: int, replicate: int) -> int:
    """Independent 64-bit stream key for one replicate."""
    ss = np.random.SeedSequence([master_seed, n, replicate])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


@dataclass(frozen=True)
class SizeSummary:
    n: int
    replicates_used: int
    sentinels: int
    mean_sqrt_n_tn: float
    var_sqrt_n_tn: float


@dataclass(frozen=True)
class ExperimentReport:
    config: ExperimentConfig
    summaries: tuple[SizeSummary, ...]

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(",".join(REPORT_COLUMNS) + "\n")
        for s in self.summaries:
            buf.write(
                f"{s.n},{s.replicates_used},{s.sentinels},"
                f"{s.mean_sqrt_n_tn:.12g},{s.var_sqrt_n_tn:.12g}\n"
            )
        return buf.getvalue()

    def to_json(self) -> str:
        cfg = {
            "kind": self.config.kind.value,
            "sample_sizes": list(self.config.sample_sizes),
            "replicates": self.config.replicates,
            "master_seed": self.config.master_seed,
            "terms": self.config.terms,
            "innovation_variance": self.config.innovation_variance,
            "rho": self.config.rho,
        }
        rows = [
            {
                "n": s.n,
                "replicates_used": s.replicates_used,
                "sentinels": s.sentinels,
                "mean_sqrt_n_tn": s.mean_sqrt_n_tn,
                "var_sqrt_n_tn": s.var_sqrt_n_tn,
            }
            for s in self.summaries
        ]
        return json.dumps({"config": cfg, "results": rows}, indent=2) + "\n"


def _replicate_value(spec: GeneratorSpec) -> float:
    """sqrt(n) t_n for one replicate; nan flags a sentinel outcome."""
    est = sample_split_point(generate(spec))
    if not est.crossed:
        return math.nan
    return math.sqrt(spec.n) * est.t_n


def run_experiment(config: ExperimentConfig, workers: int | None = None) -> ExperimentReport:
    """Replicated split-point estimation over the configured sizes.

    Sentinel outcomes are excluded from the moments and counted.  With
    ``workers`` > 1 replicates run in a process pool; the fold stays in
    replicate order either way.
    """
    summaries = []
    for n in config.sample_sizes:
        specs = [config.spec_for(n, r) for r in range(config.replicates)]
        if workers is not None and workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                values = list(pool.map(_replicate_value, specs, chunksize=16))
        else:
            values = [_replicate_value(s) for s in specs]
        arr = np.asarray(values, dtype=np.float64)
        finite = arr[~np.isnan(arr)]
        sentinels = int(np.isnan(arr).sum())
        used = finite.size
        mean = float(np.mean(finite)) if used else math.nan
        var = float(np.var(finite, ddof=1)) if used >= 2 else math.nan
        summaries.append(
            SizeSummary(
                n=n,
                replicates_used=used,
                sentinels=sentinels,
                mean_sqrt_n_tn=mean,
                var_sqrt_n_tn=var,
            )
        )
    return ExperimentReport(config=config, summaries=tuple(summaries))


def normality_diagnostic(standardized_values) -> float:
    """Kolmogorov-Smirnov distance of standardized values from N(0, 1).

    The caller standardizes (divide sqrt(n) t_n by the asymptotic standard
    deviation); at least 100 values are required for the distance to mean
    anything.
    """
    arr = np.asarray(standardized_values, dtype=np.float64)
    if arr.ndim != 1 or arr.size < 100:
        raise DomainError(f"need at least 100 standardized values, got {arr.size}")
    return float(stats.kstest(arr, "norm").statistic)
