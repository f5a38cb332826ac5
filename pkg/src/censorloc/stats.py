"""Sufficient statistics and likelihood for censored binary detections."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidInput, InvalidObservation
from .geometry import Point, as_points, convex_hull, polygon_area_centroid, vertex_mean
from .region import ConvexArcRegion, intersect_disks, max_distance_to


@dataclass(frozen=True)
class Observation:
    """Locations reported by the detecting sensors.

    ``radius`` is the detection radius when it is known to the estimator and
    ``None`` otherwise.
    """

    sensors: tuple[Point, ...]
    radius: float | None = None

    def __post_init__(self):
        pts = tuple(as_points(self.sensors))
        if not pts:
            raise InvalidInput("an observation needs at least one detecting sensor")
        object.__setattr__(self, "sensors", pts)
        if self.radius is not None:
            r = float(self.radius)
            if not (math.isfinite(r) and r > 0):
                raise InvalidInput(f"radius must be positive, got {self.radius}")
            object.__setattr__(self, "radius", r)

    def __len__(self) -> int:
        return len(self.sensors)

    def with_radius(self, radius: float | None) -> "Observation":
        return Observation(self.sensors, radius)

    def subset(self, indices: Iterable[int]) -> "Observation":
        return Observation(tuple(self.sensors[i] for i in indices), self.radius)

    def shifted(self, dx: float, dy: float) -> "Observation":
        return Observation(tuple(Point(p.x + dx, p.y + dy) for p in self.sensors), self.radius)


@dataclass(frozen=True)
class MssResult:
    indices: tuple[int, ...]
    region: ConvexArcRegion = field(repr=False)


@dataclass(frozen=True)
class LikelihoodParams:
    deployment_area: float
    total_sensors: int

    def __post_init__(self):
        if not self.deployment_area > 0:
            raise InvalidInput("deployment area must be positive")
        if self.total_sensors < 1:
            raise InvalidInput("total sensor count must be positive")


def _radius(obs: Observation, R: float | None) -> float:
    r = obs.radius if R is None else R
    if r is None:
        raise InvalidInput("this operation needs a known detection radius")
    return float(r)


def hull_corner_indices(obs: Observation) -> list[int]:
    """Indices of the sensors sitting on hull corners, in canonical hull order.

    When several sensors share a corner location the lowest index is used.
    """
    first: dict[Point, int] = {}
    for i, p in enumerate(obs.sensors):
        first.setdefault(p, i)
    return [first[p] for p in convex_hull(obs.sensors).vertices]


def hull_corner_statistic(obs: Observation) -> list[Point]:
    """Corners of the convex hull of the detecting sensors.

    This is sufficient for the target location and the radius jointly, so it
    is the statistic to use when the radius is unknown.
    """
    return list(convex_hull(obs.sensors).vertices)


def possible_region(obs: Observation, R: float | None = None) -> ConvexArcRegion:
    """Region of target locations consistent with ``obs``.

    Only hull corners are intersected; every other sensor is a convex
    combination of them and cannot cut the region further.
    """
    r = _radius(obs, R)
    corners = hull_corner_statistic(obs)
    region = intersect_disks(corners, r)
    if region is None:
        raise InvalidObservation("inconsistent observation: the possible target region is empty")
    return region


def minimal_sufficient_statistic(obs: Observation, R: float | None = None) -> MssResult:
    """Sensors whose disks shape the boundary of the possible target region."""
    r = _radius(obs, R)
    corner_idx = hull_corner_indices(obs)
    region = intersect_disks([obs.sensors[i] for i in corner_idx], r)
    if region is None:
        raise InvalidObservation("inconsistent observation: the possible target region is empty")
    indices = tuple(sorted(corner_idx[g] for g in region.generator_indices))
    return MssResult(indices, region)


def leave_one_out_mss(obs: Observation, R: float | None = None, tol: float = 1e-12) -> tuple[int, ...]:
    """Sensors whose removal enlarges the region (slow reference definition).

    A sensor counts when dropping it changes the region kind or grows its
    area by more than ``tol``.
    """
    r = _radius(obs, R)
    full = intersect_disks(obs.sensors, r)
    if full is None:
        raise InvalidObservation("inconsistent observation: the possible target region is empty")
    if len(obs.sensors) == 1:
        return (0,)
    out = []
    for j in range(len(obs.sensors)):
        rest = [p for i, p in enumerate(obs.sensors) if i != j]
        if obs.sensors[j] in rest:
            continue
        reduced = intersect_disks(rest, r)
        assert reduced is not None
        if reduced.kind != full.kind or reduced.area - full.area > tol:
            out.append(j)
    return tuple(out)


def near_points_contains(T: ConvexArcRegion, p: Sequence[float], eps: float = 1e-9) -> bool:
    """True iff every point of ``T`` is within ``R`` of ``p``.

    A detecting sensor with this property is redundant: its disk already
    covers the whole region.
    """
    return max_distance_to(T, p) <= T.radius + eps


def log_likelihood(
    obs: Observation,
    target: Sequence[float],
    params: LikelihoodParams,
    R: float | None = None,
    *,
    hull_form: bool = False,
) -> float:
    """Log-density of the detecting-sensor locations given a target location.

    With ``hull_form`` the support indicator is evaluated on the hull corners
    only, which is the factorization used when the radius is a parameter.
    Returns ``-inf`` off the support.
    """
    r = _radius(obs, R)
    A = float(params.deployment_area)
    disk = math.pi * r * r
    if disk >= A:
        raise InvalidInput("the detection disk does not fit in the deployment region")
    n = len(obs.sensors)
    N = int(params.total_sensors)
    if N < n:
        raise InvalidInput("total sensor count is smaller than the number of detections")

    pts = hull_corner_statistic(obs) if hull_form else obs.sensors
    lim = r + 1e-9
    if any(math.hypot(p.x - target[0], p.y - target[1]) > lim for p in pts):
        return -math.inf
    miss = (N - n) * math.log1p(-disk / A) if N > n else 0.0
    return -n * math.log(A) + miss


def completeness_witness(points: Iterable[Sequence[float]]) -> Point:
    """Hull-corner average minus hull area centroid.

    Its mean is zero under any isotropic sensor layout, yet it is almost
    never zero itself once the hull has four or more corners.  Hulls with
    fewer than three corners give the zero vector.
    """
    hull = convex_hull(points)
    if len(hull) < 3:
        return Point(0.0, 0.0)
    avg = vertex_mean(hull.vertices)
    _, cen = polygon_area_centroid(hull)
    return Point(avg.x - cen.x, avg.y - cen.y)
