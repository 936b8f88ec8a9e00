"""Instrumented scaling runs: operation counts and stage depth across sizes.

Each run draws a reproducible random matrix, lifts it into a counting ring,
executes the chosen algorithm and records exact add/sub/mul totals plus the
dependency depth of the result. Wall time is captured for orientation only;
nothing is ever asserted on it. Output is a flat table (CSV or JSON rows)
with one row per (algorithm, size).
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from . import baselines, pipeline
from .errors import UsageError
from .instrument import CountingRing
from .matrices import Matrix
from .rings import Ring

CSV_HEADER = "algo,n,adds,subs,muls,depth,ms"

# name -> (runner, result kind); "element" results carry one depth, "charpoly"
# results take the deepest coefficient
ALGORITHMS = {
    "formula": (pipeline.determinant, "element"),
    "permutation": (baselines.det_permutation, "element"),
    "chio": (baselines.det_chio, "element"),
    "berkowitz": (baselines.charpoly_berkowitz, "charpoly"),
    "csanky": (baselines.charpoly_csanky, "charpoly"),
}


@dataclass
class ScalingRow:
    algo: str
    n: int
    adds: int
    subs: int
    muls: int
    depth: int
    ms: float

    def csv(self) -> str:
        return (f"{self.algo},{self.n},{self.adds},{self.subs},"
                f"{self.muls},{self.depth},{self.ms:.3f}")

    def as_dict(self) -> dict:
        return {
            "algo": self.algo, "n": self.n, "adds": self.adds,
            "subs": self.subs, "muls": self.muls, "depth": self.depth,
            "ms": self.ms,
        }


def random_matrix(ring: Ring, n: int, rng: random.Random) -> Matrix:
    return Matrix(ring, tuple(
        tuple(ring.random_element(rng) for _ in range(n)) for _ in range(n)
    ))


def seeded_matrix(ring: Ring, n: int, seed: int) -> Matrix:
    """The matrix benched at size n for a given seed; independent of algorithm."""
    return random_matrix(ring, n, random.Random(seed * 1_000_003 + n))


def lift_matrix(counting: CountingRing, m: Matrix) -> Matrix:
    lift = counting.lift
    return Matrix(counting, tuple(tuple(lift(x) for x in row) for row in m.entries))


def run_one(algo: str, matrix: Matrix) -> ScalingRow:
    """Run one instrumented execution on an un-instrumented input matrix."""
    try:
        runner, kind = ALGORITHMS[algo]
    except KeyError:
        raise UsageError(f"unknown algorithm {algo!r}; choose from "
                         f"{', '.join(sorted(ALGORITHMS))}") from None
    counting = CountingRing(matrix.ring)
    lifted = lift_matrix(counting, matrix)
    t0 = time.perf_counter()
    result = runner(lifted)
    ms = (time.perf_counter() - t0) * 1000.0
    stats = counting.stats()
    if kind == "element":
        depth = counting.depth_hint(result)
    else:
        depth = max(counting.depth_hint(c) for c in result.coeffs)
    return ScalingRow(algo, matrix.rows, stats.adds, stats.subs, stats.muls,
                      depth, ms)


def run_scaling(algorithms, sizes, ring: Ring, seed: int = 0) -> list[ScalingRow]:
    """One row per (algorithm, size), sizes ascending, matrices seed-derived."""
    if isinstance(algorithms, str):
        algorithms = [algorithms]
    sizes = sorted(sizes)
    if not sizes or any(n < 1 for n in sizes):
        raise UsageError("sizes must be positive integers")
    rows = []
    for algo in algorithms:
        for n in sizes:
            rows.append(run_one(algo, seeded_matrix(ring, n, seed)))
    return rows


def rows_to_csv(rows) -> str:
    return "\n".join([CSV_HEADER] + [r.csv() for r in rows])


def fit_loglog_slope(rows) -> Fraction:
    """Least-squares slope of log(muls) against log(n), to two decimals."""
    rows = list(rows)
    if len(rows) < 3:
        raise UsageError(f"need at least 3 rows to fit a slope, got {len(rows)}")
    if len({r.algo for r in rows}) != 1:
        raise UsageError("slope fit needs rows from a single algorithm")
    xs = [math.log(r.n) for r in rows]
    ys = [math.log(r.muls) for r in rows]
    xbar = sum(xs) / len(xs)
    ybar = sum(ys) / len(ys)
    sxx = sum((x - xbar) ** 2 for x in xs)
    sxy = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys))
    return Fraction(f"{sxy / sxx:.2f}")
