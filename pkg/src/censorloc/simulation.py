"""Monte Carlo evaluation of the estimators on random sensor deployments.

Every trial draws its own random stream from ``(master_seed, trial_index)``,
so results do not depend on how trials are spread over worker processes.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import InvalidConfig, InvalidInput
from .estimators import ALL_ESTIMATORS, EstimatorId, estimate, estimate_cm, parse_ids
from .geometry import Point
from .stats import Observation, hull_corner_indices, minimal_sufficient_statistic

RNG_FAMILY = "numpy.random.Philox(SeedSequence([master_seed, trial_index]))"
THREADS_ENV = "CENSORLOC_THREADS"

DEFAULT_DENSITIES = (0.25, 0.5, 1.0, 2.0, 3.0, 4.0)
DEFAULT_RADII = (1.0, 2.0, 3.0, 4.0, 5.0)

# Asymmetric triangle whose CM moves by about 3 cm between the two radii.
DEFAULT_COUNTEREXAMPLE = ((0.0, 0.0), (1.2, 0.0), (0.0, 1.0))
DEFAULT_COUNTEREXAMPLE_RADII = (1.05, 1.6)


@dataclass(frozen=True)
class ScenarioConfig:
    """One deployment scenario: a square of side ``2 * half_width`` centered at the origin.

    Give either ``density`` (sensors per square meter, ``N = floor(density * area)``)
    or ``n_sensors`` directly.
    """

    radius: float = 1.0
    density: float | None = 1.0
    n_sensors: int | None = None
    half_width: float = 50.0
    target: tuple[float, float] = (0.0, 0.0)
    random_target: bool = False
    estimators: tuple[EstimatorId, ...] = ALL_ESTIMATORS
    trials: int = 1000
    master_seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "estimators", parse_ids(self.estimators))
        object.__setattr__(self, "target", (float(self.target[0]), float(self.target[1])))
        self.validate()

    @property
    def area(self) -> float:
        return (2.0 * self.half_width) ** 2

    @property
    def total_sensors(self) -> int:
        if self.n_sensors is not None:
            return int(self.n_sensors)
        # round first so that e.g. 0.29 * 1e4 does not floor to 2899
        return math.floor(round(self.density * self.area, 9))

    def validate(self) -> None:
        if not (self.half_width > 0 and math.isfinite(self.half_width)):
            raise InvalidConfig("half_width must be positive")
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise InvalidConfig("radius must be positive")
        if 2 * self.radius >= self.half_width:
            raise InvalidConfig(
                f"radius {self.radius} too large: need 2R < half_width ({self.half_width})")
        if (self.density is None) == (self.n_sensors is None):
            raise InvalidConfig("give exactly one of density or n_sensors")
        if self.density is not None and not (self.density > 0 and math.isfinite(self.density)):
            raise InvalidConfig("density must be positive")
        if self.n_sensors is not None and self.n_sensors < 0:
            raise InvalidConfig("n_sensors must be non-negative")
        if self.trials < 1:
            raise InvalidConfig("trials must be at least 1")
        if not 0 <= self.master_seed < 2 ** 64:
            raise InvalidConfig("master_seed must fit in 64 unsigned bits")
        if not self.random_target:
            margin = self.half_width - 2 * self.radius
            if max(abs(self.target[0]), abs(self.target[1])) > margin:
                raise InvalidConfig("target must sit at least 2R inside the deployment square")


class NoDetection(NamedTuple):
    trial_index: int
    target: Point


@dataclass
class TrialOutcome:
    trial_index: int
    target: Point
    n_detecting: int
    estimates: dict[EstimatorId, Point]
    sq_errors: dict[EstimatorId, float]
    mss_size: int
    hull_corner_count: int

    @property
    def all_corners_contributing(self) -> bool:
        return self.mss_size == self.hull_corner_count


@dataclass
class SweepRecord:
    variable: str
    value: float
    estimator: EstimatorId
    trials_total: int
    trials_detecting: int
    mse: float | None
    mean_error: tuple[float, float] | None
    stderr_mse: float | None
    # per-value diagnostics, identical across the estimator rows of one value
    diagnostics: dict[str, float] = field(default_factory=dict)


def trial_rng(master_seed: int, trial_index: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([master_seed, trial_index])))


def draw_deployment(cfg: ScenarioConfig, trial_index: int) -> tuple[Point, np.ndarray]:
    """Target location and the ``(N, 2)`` array of sensor positions for one trial."""
    rng = trial_rng(cfg.master_seed, trial_index)
    hw = cfg.half_width
    if cfg.random_target:
        lim = hw - 2 * cfg.radius
        tx, ty = rng.uniform(-lim, lim, size=2)
        target = Point(tx, ty)
    else:
        target = Point(*cfg.target)
    sensors = rng.uniform(-hw, hw, size=(cfg.total_sensors, 2))
    return target, sensors


def run_trial(cfg: ScenarioConfig, trial_index: int) -> TrialOutcome | NoDetection:
    target, sensors = draw_deployment(cfg, trial_index)
    d2 = (sensors[:, 0] - target.x) ** 2 + (sensors[:, 1] - target.y) ** 2
    hits = sensors[d2 <= cfg.radius ** 2]
    if len(hits) == 0:
        return NoDetection(trial_index, target)

    obs = Observation(tuple(Point(x, y) for x, y in hits), cfg.radius)
    ests = {e.estimator: e.point for e in estimate(obs, cfg.estimators)}
    sq = {k: (p.x - target.x) ** 2 + (p.y - target.y) ** 2 for k, p in ests.items()}
    mss = minimal_sufficient_statistic(obs)
    return TrialOutcome(
        trial_index=trial_index,
        target=target,
        n_detecting=len(hits),
        estimates=ests,
        sq_errors=sq,
        mss_size=len(mss.indices),
        hull_corner_count=len(hull_corner_indices(obs)),
    )


def _run_chunk(args) -> list:
    cfg, indices = args
    return [run_trial(cfg, i) for i in indices]


def default_workers() -> int:
    raw = os.environ.get(THREADS_ENV)
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise InvalidConfig(f"{THREADS_ENV} must be an integer, got {raw!r}") from None


def run_trials(cfg: ScenarioConfig, workers: int | None = None,
               indices: Iterable[int] | None = None) -> list[TrialOutcome | NoDetection]:
    """Run trials and return them in ascending trial-index order."""
    idx = list(range(cfg.trials)) if indices is None else sorted(indices)
    workers = default_workers() if workers is None else max(1, int(workers))
    if workers == 1 or len(idx) < 2:
        return [run_trial(cfg, i) for i in idx]
    n_chunks = min(len(idx), workers * 4)
    chunks = [idx[k::n_chunks] for k in range(n_chunks)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_run_chunk, [(cfg, c) for c in chunks]))
    out = [t for part in parts for t in part]
    out.sort(key=lambda t: t.trial_index)
    return out


def aggregate(cfg: ScenarioConfig, outcomes: Sequence[TrialOutcome | NoDetection],
              variable: str, value: float) -> list[SweepRecord]:
    """Per-estimator MSE over the trials that had at least one detection."""
    hits = [o for o in outcomes if isinstance(o, TrialOutcome)]
    M = len(hits)
    diag: dict[str, float] = {}
    if M:
        diag = {
            "mean_n": math.fsum(o.n_detecting for o in hits) / M,
            "mean_mss_size": math.fsum(o.mss_size for o in hits) / M,
            "mean_hull_corners": math.fsum(o.hull_corner_count for o in hits) / M,
            "all_corners_contributing": sum(o.all_corners_contributing for o in hits) / M,
        }
    records = []
    for eid in sorted(cfg.estimators, key=lambda e: e.value):
        mse = mean_err = stderr = None
        if M:
            se = [o.sq_errors[eid] for o in hits]
            mse = math.fsum(se) / M
            mean_err = (
                math.fsum(o.estimates[eid].x - o.target.x for o in hits) / M,
                math.fsum(o.estimates[eid].y - o.target.y for o in hits) / M,
            )
            if M > 1:
                var = math.fsum((s - mse) ** 2 for s in se) / (M - 1)
                stderr = math.sqrt(var / M)
        records.append(SweepRecord(variable, value, eid, len(outcomes), M, mse, mean_err, stderr, diag))
    return records


def config_for(base: ScenarioConfig, variable: str, value: float) -> ScenarioConfig:
    if variable == "density":
        return replace(base, density=float(value), n_sensors=None)
    if variable == "radius":
        return replace(base, radius=float(value))
    raise InvalidConfig(f"unknown sweep variable {variable!r}; use 'density' or 'radius'")


def run_sweep(base: ScenarioConfig, variable: str, values: Sequence[float],
              workers: int | None = None) -> list[SweepRecord]:
    """MSE of every configured estimator at each value of ``variable``.

    Configs are validated up front so a bad value fails before any trial runs.
    """
    if not values:
        raise InvalidConfig("a sweep needs at least one value")
    cfgs = [config_for(base, variable, v) for v in values]
    records: list[SweepRecord] = []
    for v, cfg in sorted(zip(values, cfgs), key=lambda vc: float(vc[0])):
        records.extend(aggregate(cfg, run_trials(cfg, workers), variable, float(v)))
    return records


def counterexample_report(sensors: Sequence[Sequence[float]],
                          radii: tuple[float, float]) -> tuple[Point, Point, float]:
    """CM estimates of one observation under two detection radii, and their distance."""
    if len(radii) != 2:
        raise InvalidInput("exactly two radii are required")
    obs = Observation(tuple(sensors))
    a = estimate_cm(obs, radii[0])
    b = estimate_cm(obs, radii[1])
    return a, b, math.hypot(a.x - b.x, a.y - b.y)
