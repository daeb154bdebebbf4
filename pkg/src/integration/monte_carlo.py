"""
Monte Carlo Integration Layer

Seeding and statistics for repeated randomized trials:
1. Per-trial seed derivation that does not depend on execution order
2. Exact per-probability aggregation (mean, sample standard deviation)
3. Rank correlation of a summary curve against its parameter grid
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.stats import spearmanr


# Regeneration limit when disconnected samples are resampled
MAX_ATTEMPTS = 100


@dataclass(frozen=True)
class Aggregate:
    """Mean, sample standard deviation and count of one set of trial values"""

    mean: Fraction
    stddev: float
    trials: int


class MonteCarloIntegration:
    """
    Handles the statistics shared by every randomized experiment.

    All methods are pure: identical inputs give identical outputs regardless
    of how the trials were scheduled.
    """

    @staticmethod
    def mix_seed(base_seed: int, p_index: int, trial: int, attempt: int = 0) -> int:
        """
        Derive the seed of one trial.

        Uses numpy's SeedSequence hashing over (base_seed, p_index, trial,
        attempt), so neighbouring trials get statistically independent streams.

        Args:
            base_seed: Experiment seed (non-negative)
            p_index: Position of the probability in the grid
            trial: Trial index
            attempt: Regeneration attempt (0 for the first sample)

        Returns:
            64-bit unsigned seed as a Python int
        """
        for name, value in (("base_seed", base_seed), ("p_index", p_index),
                            ("trial", trial), ("attempt", attempt)):
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < 0:
                raise ValueError(f"{name} must be a non-negative integer, got {value!r}")

        sequence = np.random.SeedSequence([int(base_seed), int(p_index), int(trial), int(attempt)])
        return int(sequence.generate_state(1, dtype=np.uint64)[0])

    @staticmethod
    def aggregate(values: Sequence[Fraction]) -> Aggregate:
        """
        Exact mean and sample standard deviation (ddof=1) of trial values.

        A single trial has stddev 0.0; identical values give exactly 0.0.

        Raises:
            ValueError: If values is empty
        """
        if len(values) == 0:
            raise ValueError("Cannot aggregate an empty set of trials")

        exact = [Fraction(value) for value in values]
        count = len(exact)
        mean = sum(exact, Fraction(0)) / count
        if count == 1:
            return Aggregate(mean=mean, stddev=0.0, trials=1)

        variance = sum(((value - mean) ** 2 for value in exact), Fraction(0)) / (count - 1)
        return Aggregate(mean=mean, stddev=math.sqrt(variance), trials=count)

    @staticmethod
    def rank_correlation(xs: Sequence[float], ys: Sequence[float]) -> float:
        """
        Spearman rank correlation between a grid and a summary curve.

        Returns:
            rho in [-1, 1]; nan when either side is constant or has fewer
            than two points
        """
        if len(xs) != len(ys):
            raise ValueError(f"Length mismatch: {len(xs)} grid values, {len(ys)} means")
        if len(xs) < 2:
            return float("nan")
        rho, _ = spearmanr([float(x) for x in xs], [float(y) for y in ys])
        return float(rho)
