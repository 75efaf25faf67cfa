"""Seeded Monte Carlo over uniform-random games.

Game g of a run draws its moves from the stream derived from
(seed, g), so results are identical whether the games run in one process
or are sharded across workers; aggregation always happens in game-index
order. The hot playout loop is the compiled kernel when available.
"""

from __future__ import annotations

import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import kernels
from .core import fib_table, zeckendorf
from .strategies import Winner, winner_for_length


class DegenerateStatsError(ValueError):
    """All observed lengths were identical; no Gaussian fit exists."""


@dataclass(frozen=True)
class SimStats:
    n: int
    trials: int
    seed: int
    histogram: dict[int, int]  # game length -> frequency
    mean: float
    variance: float
    skewness: float
    excess_kurtosis: float
    p1_wins: int
    p2_wins: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "trials": self.trials,
            "seed": self.seed,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "mean": self.mean,
            "variance": self.variance,
            "skewness": self.skewness,
            "excess_kurtosis": self.excess_kurtosis,
            "p1_wins": self.p1_wins,
            "p2_wins": self.p2_wins,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SimStats":
        return cls(
            n=obj["n"],
            trials=obj["trials"],
            seed=obj["seed"],
            histogram={int(k): v for k, v in obj["histogram"].items()},
            mean=obj["mean"],
            variance=obj["variance"],
            skewness=obj["skewness"],
            excess_kurtosis=obj["excess_kurtosis"],
            p1_wins=obj["p1_wins"],
            p2_wins=obj["p2_wins"],
        )


def _shard(args: tuple[int, int, int, int]) -> list[int]:
    n, seed, start, count = args
    return kernels.random_playout_lengths(n, seed, start, count)


def playout_lengths(
    n: int, trials: int, seed: int, workers: int = 1
) -> list[int]:
    """Lengths of games 0..trials-1; identical for any worker count."""
    if workers <= 1:
        return kernels.random_playout_lengths(n, seed, 0, trials)
    chunk = (trials + workers - 1) // workers
    shards = [
        (n, seed, start, min(chunk, trials - start))
        for start in range(0, trials, chunk)
    ]
    lengths: list[int] = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_shard, shards):
            lengths.extend(part)
    return lengths


def _central_moments(lengths: list[int]) -> tuple[float, float, float, float]:
    trials = len(lengths)
    mean = sum(lengths) / trials
    m2 = sum((x - mean) ** 2 for x in lengths) / trials
    m3 = sum((x - mean) ** 3 for x in lengths) / trials
    m4 = sum((x - mean) ** 4 for x in lengths) / trials
    return mean, m2, m3, m4


def simulate(n: int, trials: int, seed: int, workers: int = 1) -> SimStats:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    lengths = playout_lengths(n, trials, seed, workers)
    histogram: dict[int, int] = {}
    p1 = p2 = 0
    for length in lengths:
        histogram[length] = histogram.get(length, 0) + 1
        w = winner_for_length(length)
        if w is Winner.PLAYER1:
            p1 += 1
        elif w is Winner.PLAYER2:
            p2 += 1
    mean, m2, m3, m4 = _central_moments(lengths)
    if m2 > 0:
        skew = m3 / m2 ** 1.5
        exkurt = m4 / m2 ** 2 - 3.0
    else:
        skew = exkurt = 0.0
    return SimStats(
        n=n,
        trials=trials,
        seed=seed,
        histogram=histogram,
        mean=mean,
        variance=m2,
        skewness=skew,
        excess_kurtosis=exkurt,
        p1_wins=p1,
        p2_wins=p2,
    )


@dataclass(frozen=True)
class GaussianFit:
    mu: float
    sigma: float
    curve: tuple[tuple[int, float], ...]  # (length, expected frequency)

    def to_json(self) -> dict:
        return {
            "mu": self.mu,
            "sigma": self.sigma,
            "curve": [[x, y] for x, y in self.curve],
        }


def gaussian_fit(stats: SimStats) -> GaussianFit:
    """Moment-matched normal overlay for the length histogram
    (bin width 1, scaled by trial count)."""
    if stats.trials < 2:
        raise DegenerateStatsError("need at least two trials to fit")
    if stats.variance <= 0:
        raise DegenerateStatsError(
            f"all {stats.trials} games had length {stats.mean:g}; "
            "variance is zero"
        )
    mu = stats.mean
    sigma = math.sqrt(stats.variance)
    lo = min(stats.histogram)
    hi = max(stats.histogram)
    curve = tuple(
        (
            x,
            stats.trials
            * math.exp(-0.5 * ((x - mu) / sigma) ** 2)
            / (sigma * math.sqrt(2 * math.pi)),
        )
        for x in range(lo, hi + 1)
    )
    return GaussianFit(mu=mu, sigma=sigma, curve=curve)


@dataclass(frozen=True)
class ScalingReport:
    trials: int
    seed: int
    means: tuple[tuple[int, float], ...]  # (n, mean length)
    slope: float
    intercept: float

    def to_json(self) -> dict:
        return {
            "trials": self.trials,
            "seed": self.seed,
            "means": [[n, m] for n, m in self.means],
            "slope": self.slope,
            "intercept": self.intercept,
        }


def average_scaling(
    ns: list[int], trials: int, seed: int, workers: int = 1
) -> ScalingReport:
    """Mean random-game length per n, with the least-squares line."""
    if len(ns) < 2:
        raise ValueError("need at least two n values for a fit")
    if len(set(ns)) < 2:
        raise DegenerateStatsError("all n values identical; slope undefined")
    means = tuple(
        (n, simulate(n, trials, seed, workers).mean) for n in ns
    )
    k = len(means)
    sx = sum(n for n, _ in means)
    sy = sum(m for _, m in means)
    sxx = sum(n * n for n, _ in means)
    sxy = sum(n * m for n, m in means)
    slope = (k * sxy - sx * sy) / (k * sxx - sx * sx)
    intercept = (sy - slope * sx) / k
    return ScalingReport(
        trials=trials, seed=seed, means=means, slope=slope, intercept=intercept
    )


def stats_to_csv(stats: SimStats) -> str:
    """CSV with a metadata header row followed by (length, frequency) rows.

    The text is built deterministically so identical runs are
    byte-identical.
    """
    buf = io.StringIO()
    buf.write(
        "# n,trials,seed,mean,variance,skewness,excess_kurtosis,"
        "p1_wins,p2_wins\n"
    )
    buf.write(
        f"# {stats.n},{stats.trials},{stats.seed},{stats.mean!r},"
        f"{stats.variance!r},{stats.skewness!r},{stats.excess_kurtosis!r},"
        f"{stats.p1_wins},{stats.p2_wins}\n"
    )
    buf.write("length,frequency\n")
    for length in sorted(stats.histogram):
        buf.write(f"{length},{stats.histogram[length]}\n")
    return buf.getvalue()


def stats_from_csv(text: str) -> SimStats:
    lines = text.strip().splitlines()
    meta = lines[1].lstrip("# ").split(",")
    histogram: dict[int, int] = {}
    for row in lines[3:]:
        k, v = row.split(",")
        histogram[int(k)] = int(v)
    return SimStats(
        n=int(meta[0]),
        trials=int(meta[1]),
        seed=int(meta[2]),
        histogram=histogram,
        mean=float(meta[3]),
        variance=float(meta[4]),
        skewness=float(meta[5]),
        excess_kurtosis=float(meta[6]),
        p1_wins=int(meta[7]),
        p2_wins=int(meta[8]),
    )


def records_to_csv(rows: list[tuple[int, str, int, str]]) -> str:
    """Batch-run export: (n, policy, length, winner) rows."""
    out = ["n,policy,length,winner"]
    out.extend(f"{n},{policy},{length},{winner}" for n, policy, length, winner in rows)
    return "\n".join(out) + "\n"


def length_bounds(n: int) -> tuple[int, int]:
    """Theoretical [n - Z(n), ell(n) * n] window every game length obeys."""
    return n - zeckendorf(n).z, fib_table(n).ell * n


def export_stats_json(stats: SimStats, fit: GaussianFit | None = None) -> str:
    doc: dict = {"stats": stats.to_json()}
    if fit is not None:
        doc["gaussian_fit"] = fit.to_json()
    return json.dumps(doc, indent=2)
