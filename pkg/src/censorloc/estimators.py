"""Point estimators of the target location.

``CM_MVU`` and ``SLT`` need the detection radius; the four heuristics only
look at the sensor locations.
"""

from __future__ import annotations

import enum
import math
from types import MappingProxyType
from typing import Callable, Iterable, NamedTuple

from .geometry import (
    Point,
    bounding_rectangle_center,
    min_enclosing_circle,
    steiner_center,
    vertex_mean,
)
from .region import RegionKind, region_centroid
from .stats import Observation, possible_region


class EstimatorId(str, enum.Enum):
    CM_MVU = "CM_MVU"
    SLT = "SLT"
    SENSOR_MEAN = "SENSOR_MEAN"
    STEINER = "STEINER"
    MEC_CENTER = "MEC_CENTER"
    MER_CENTER = "MER_CENTER"

    @property
    def needs_radius(self) -> bool:
        return self in (EstimatorId.CM_MVU, EstimatorId.SLT)

    def __str__(self) -> str:
        return self.value


class Estimate(NamedTuple):
    estimator: EstimatorId
    point: Point


def estimate_cm(obs: Observation, R: float | None = None) -> Point:
    """Center of mass of the possible target region (the MVU estimate)."""
    return region_centroid(possible_region(obs, R))


def slt_centroid(vertices) -> Point:
    """Centroid of a convex polygon by fan triangulation from the first vertex."""
    a = vertices[0]
    weights, xs, ys = [], [], []
    for b, c in zip(vertices[1:-1], vertices[2:]):
        w = 0.5 * abs((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x))
        weights.append(w)
        xs.append(w * (a.x + b.x + c.x) / 3)
        ys.append(w * (a.y + b.y + c.y) / 3)
    total = math.fsum(weights)
    if total == 0.0:
        return vertex_mean(vertices)
    return Point(math.fsum(xs) / total, math.fsum(ys) / total)


def estimate_slt(obs: Observation, R: float | None = None) -> Point:
    """Centroid of the straight-line polygon through the region's vertices."""
    T = possible_region(obs, R)
    if T.kind is RegionKind.FULL:
        return T.generators[0]
    if len(T.vertices) <= 2:
        return vertex_mean(T.vertices)
    return slt_centroid(T.vertices)


def estimate_sensor_mean(obs: Observation) -> Point:
    return vertex_mean(obs.sensors)


def estimate_steiner(obs: Observation) -> Point:
    return steiner_center(obs.sensors)


def estimate_mec(obs: Observation) -> Point:
    return min_enclosing_circle(obs.sensors).center


def estimate_mer(obs: Observation) -> Point:
    return bounding_rectangle_center(obs.sensors)


REGISTRY: "MappingProxyType[EstimatorId, Callable[[Observation], Point]]" = MappingProxyType({
    EstimatorId.CM_MVU: estimate_cm,
    EstimatorId.SLT: estimate_slt,
    EstimatorId.SENSOR_MEAN: estimate_sensor_mean,
    EstimatorId.STEINER: estimate_steiner,
    EstimatorId.MEC_CENTER: estimate_mec,
    EstimatorId.MER_CENTER: estimate_mer,
})

ALL_ESTIMATORS = tuple(EstimatorId)


def parse_ids(names: Iterable[str | EstimatorId]) -> tuple[EstimatorId, ...]:
    return tuple(EstimatorId(str(n).upper()) for n in names)


def estimate(obs: Observation, estimators: Iterable[str | EstimatorId] = ALL_ESTIMATORS) -> list[Estimate]:
    """Run several estimators on one observation, in the order given."""
    out = []
    for eid in parse_ids(estimators):
        if eid.needs_radius:
            point = REGISTRY[eid](obs)
        else:
            point = REGISTRY[eid](obs.with_radius(None))
        out.append(Estimate(eid, point))
    return out
