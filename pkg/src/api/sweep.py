"""
Separation Sweep Tool

run_separation_sweep: Average separation of randomized ring lattices across a
grid of rewiring probabilities.

For every (p, trial) a graph is generated with a seed derived from
(base_seed, p_index, trial), solved with the matrix propagation solver and
summarized. Trials may run concurrently; records are merged by index and
sorted by (p_index, trial), so results never depend on scheduling.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from joblib import Parallel, delayed

from ..integration.data_converters import DataConverter
from ..integration.monte_carlo import MAX_ATTEMPTS, Aggregate, MonteCarloIntegration
from ..models.generators import DEFAULT_KDEG, GraphMode, WsParams, generate_with_stats
from ..models.separation import summarize
from ..solvers.matrix_solver import matrix_apsp


logger = logging.getLogger(__name__)

DEFAULT_P_GRID = tuple(round(0.05 * i, 2) for i in range(11))
DEFAULT_TRIALS = 100
DEFAULT_BASE_SEED = 20240601

RECORD_HEADER = (
    "p", "trial", "seed", "n", "kdeg", "mode", "mean_paper_norm",
    "mean_ordered_pairs", "diameter", "connected", "resamples",
)
SUMMARY_HEADER = ("p", "trials", "mean", "stddev")
NORMALIZATIONS = ("ordered", "paper")


@dataclass(frozen=True)
class SweepRecord:
    """
    One (probability, trial) observation.

    Disconnected samples carry means over reachable pairs only, with
    connected=False.
    """

    p: float
    p_index: int
    trial: int
    seed: int
    n: int
    kdeg: int
    mode: str
    mean_paper_norm: Fraction
    mean_ordered_pairs: Fraction
    diameter: int
    connected: bool
    resamples: int
    attempts: int = 1

    def to_row(self) -> List[Any]:
        return [
            self.p, self.trial, self.seed, self.n, self.kdeg, self.mode,
            float(self.mean_paper_norm), float(self.mean_ordered_pairs),
            self.diameter, "true" if self.connected else "false", self.resamples,
        ]


@dataclass(frozen=True)
class ProbabilityAggregate:
    """Per-probability statistics under both normalizations"""

    p: float
    ordered: Aggregate
    paper: Aggregate
    disconnected: int


@dataclass(frozen=True)
class SweepShape:
    """How the per-p mean curve moves across the grid"""

    rank_correlation: float
    first_mean: float
    last_mean: float

    @property
    def decreasing(self) -> bool:
        return self.last_mean < self.first_mean


@dataclass(frozen=True)
class SweepSummary:
    """Aggregates in grid order; every p has the same trial count"""

    aggregates: Tuple[ProbabilityAggregate, ...]

    def __post_init__(self):
        counts = {agg.ordered.trials for agg in self.aggregates}
        if len(counts) > 1:
            raise ValueError(f"Trial counts differ across probabilities: {sorted(counts)}")

    def probabilities(self) -> List[float]:
        return [agg.p for agg in self.aggregates]

    def means(self, normalization: str = "ordered") -> List[float]:
        return [float(_select(agg, normalization).mean) for agg in self.aggregates]

    def to_csv(self, normalization: str = "ordered") -> str:
        """Summary CSV "p,trials,mean,stddev" for one normalization."""
        rows = []
        for agg in self.aggregates:
            stats = _select(agg, normalization)
            rows.append([agg.p, stats.trials, float(stats.mean), stats.stddev])
        return DataConverter.rows_to_csv(SUMMARY_HEADER, rows)


@dataclass(frozen=True)
class SweepResult:
    """Configuration, per-trial records and per-probability summary"""

    n: int
    kdeg: int
    mode: str
    trials: int
    base_seed: int
    p_grid: Tuple[float, ...]
    records: Tuple[SweepRecord, ...]
    summary: SweepSummary

    def records_csv(self) -> str:
        return DataConverter.rows_to_csv(RECORD_HEADER, (r.to_row() for r in self.records))


def _select(agg: ProbabilityAggregate, normalization: str) -> Aggregate:
    if normalization == "ordered":
        return agg.ordered
    if normalization == "paper":
        return agg.paper
    raise ValueError(f"Invalid normalization: '{normalization}'. Must be one of: {list(NORMALIZATIONS)}")


def _run_trial(
    n: int,
    kdeg: int,
    p: float,
    p_index: int,
    trial: int,
    base_seed: int,
    mode: GraphMode,
    resample_disconnected: bool
) -> SweepRecord:
    attempt = 0
    while True:
        seed = MonteCarloIntegration.mix_seed(base_seed, p_index, trial, attempt)
        graph, stats = generate_with_stats(WsParams(n=n, kdeg=kdeg, p=p, seed=seed, mode=mode))
        summary = summarize(matrix_apsp(graph))

        if summary.connected or not resample_disconnected:
            break
        if attempt + 1 >= MAX_ATTEMPTS:
            logger.warning(
                f"p={p} trial={trial}: still disconnected after {MAX_ATTEMPTS} attempts, keeping sample"
            )
            break
        attempt += 1

    ordered = summary.mean_reachable_pairs or Fraction(0)
    return SweepRecord(
        p=p,
        p_index=p_index,
        trial=trial,
        seed=seed,
        n=n,
        kdeg=kdeg,
        mode=mode.value,
        mean_paper_norm=ordered * Fraction(n, n - 1),
        mean_ordered_pairs=ordered,
        diameter=summary.diameter,
        connected=summary.connected,
        resamples=stats.resamples,
        attempts=attempt + 1,
    )


def _summarize_records(grid: Sequence[float], records: Sequence[SweepRecord]) -> SweepSummary:
    by_index: Dict[int, List[SweepRecord]] = {i: [] for i in range(len(grid))}
    for record in records:
        by_index[record.p_index].append(record)

    aggregates = []
    for p_index, p in enumerate(grid):
        group = by_index[p_index]
        aggregates.append(ProbabilityAggregate(
            p=p,
            ordered=MonteCarloIntegration.aggregate([r.mean_ordered_pairs for r in group]),
            paper=MonteCarloIntegration.aggregate([r.mean_paper_norm for r in group]),
            disconnected=sum(1 for r in group if not r.connected),
        ))
    return SweepSummary(aggregates=tuple(aggregates))


def run_sweep(
    n: int,
    kdeg: int = DEFAULT_KDEG,
    p_grid: Optional[Sequence[float]] = None,
    trials: int = DEFAULT_TRIALS,
    base_seed: int = DEFAULT_BASE_SEED,
    mode: str = "rewire",
    resample_disconnected: bool = False,
    n_jobs: int = 1
) -> SweepResult:
    """
    Run the probability sweep.

    Args:
        n: Ring size
        kdeg: Ring neighbor count (even, 2 <= kdeg < n)
        p_grid: Probabilities (default 0.00 .. 0.50 step 0.05)
        trials: Trials per probability (>= 1)
        base_seed: Experiment seed
        mode: "rewire" or "add"
        resample_disconnected: Regenerate disconnected samples (up to
                               MAX_ATTEMPTS) instead of keeping them flagged
        n_jobs: Worker threads for trials (1 = sequential)

    Returns:
        SweepResult with records sorted by (p_index, trial)

    Raises:
        ValueError: On invalid parameters (including trials < 1)
    """
    grid = DataConverter.validate_probability_grid(
        list(DEFAULT_P_GRID) if p_grid is None else list(p_grid)
    )
    if isinstance(trials, bool) or not isinstance(trials, int) or trials < 1:
        raise ValueError(f"trials must be an integer >= 1, got {trials!r}")
    if isinstance(n_jobs, bool) or not isinstance(n_jobs, int) or n_jobs == 0:
        raise ValueError(f"n_jobs must be a non-zero integer, got {n_jobs!r}")
    MonteCarloIntegration.mix_seed(base_seed, 0, 0)

    # Validates n, kdeg and mode once before any work is scheduled
    graph_mode = WsParams(n=n, kdeg=kdeg, mode=mode).mode

    tasks = [
        (p_index, p, trial)
        for p_index, p in enumerate(grid)
        for trial in range(trials)
    ]
    logger.info(
        f"Sweep n={n} kdeg={kdeg} mode={graph_mode.value} over {len(grid)} probabilities "
        f"x {trials} trials (n_jobs={n_jobs})"
    )

    if n_jobs == 1:
        records = [
            _run_trial(n, kdeg, p, p_index, trial, base_seed, graph_mode, resample_disconnected)
            for p_index, p, trial in tasks
        ]
    else:
        records = Parallel(n_jobs=n_jobs, prefer="threads")(
            delayed(_run_trial)(n, kdeg, p, p_index, trial, base_seed, graph_mode, resample_disconnected)
            for p_index, p, trial in tasks
        )

    records = sorted(records, key=lambda r: (r.p_index, r.trial))
    summary = _summarize_records(grid, records)

    for agg in summary.aggregates:
        logger.info(
            f"p={agg.p}: mean={float(agg.ordered.mean):.6g} sd={agg.ordered.stddev:.3g} "
            f"disconnected={agg.disconnected}"
        )

    return SweepResult(
        n=n,
        kdeg=kdeg,
        mode=graph_mode.value,
        trials=trials,
        base_seed=base_seed,
        p_grid=tuple(grid),
        records=tuple(records),
        summary=summary,
    )


def sweep_shape(summary: SweepSummary, normalization: str = "ordered") -> SweepShape:
    """Rank correlation of per-p mean vs p, plus the first and last means."""
    means = summary.means(normalization)
    return SweepShape(
        rank_correlation=MonteCarloIntegration.rank_correlation(summary.probabilities(), means),
        first_mean=means[0],
        last_mean=means[-1],
    )


def write_sweep_csv(result: SweepResult, path) -> Path:
    return DataConverter.write_text(path, result.records_csv())


def write_summary_csv(summary: SweepSummary, path, normalization: str = "ordered") -> Path:
    return DataConverter.write_text(path, summary.to_csv(normalization))


def run_separation_sweep(
    n: int,
    kdeg: int = DEFAULT_KDEG,
    p_grid: Optional[List[float]] = None,
    trials: int = DEFAULT_TRIALS,
    base_seed: int = DEFAULT_BASE_SEED,
    mode: str = "rewire",
    resample_disconnected: bool = False,
    include_records: bool = False,
    solver_options: Optional[Dict[str, Any]] = None
) -> Dict[str, Any]:
    """
    Run the sweep and return JSON-ready results.

    Args:
        solver_options: Optional {"n_jobs": int}
        include_records: Add every per-trial record

    Returns:
        Dict with:
        - status: "success"
        - config: n, kdeg, mode, trials, base_seed, p_grid
        - summary: per-p mean/stddev under both normalizations and the
          number of disconnected samples
        - shape: rank_correlation, first_mean, last_mean, decreasing
        - records (when include_records)

    Example:
        run_separation_sweep(n=20, p_grid=[0.0, 0.5], trials=50)
    """
    opts = solver_options or {}
    result = run_sweep(
        n=n,
        kdeg=kdeg,
        p_grid=p_grid,
        trials=trials,
        base_seed=base_seed,
        mode=mode,
        resample_disconnected=resample_disconnected,
        n_jobs=opts.get("n_jobs", 1),
    )
    shape = sweep_shape(result.summary)

    output = {
        "status": "success",
        "config": {
            "n": result.n,
            "kdeg": result.kdeg,
            "mode": result.mode,
            "trials": result.trials,
            "base_seed": result.base_seed,
            "p_grid": list(result.p_grid),
        },
        "summary": [
            {
                "p": agg.p,
                "trials": agg.ordered.trials,
                "mean_ordered_pairs": float(agg.ordered.mean),
                "stddev_ordered_pairs": agg.ordered.stddev,
                "mean_paper_norm": float(agg.paper.mean),
                "stddev_paper_norm": agg.paper.stddev,
                "disconnected": agg.disconnected,
            }
            for agg in result.summary.aggregates
        ],
        "shape": {
            "rank_correlation": shape.rank_correlation,
            "first_mean": shape.first_mean,
            "last_mean": shape.last_mean,
            "decreasing": shape.decreasing,
        },
    }
    if include_records:
        output["records"] = [
            dict(zip(RECORD_HEADER, record.to_row())) for record in result.records
        ]
    return output
