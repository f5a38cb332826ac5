"""Brute-force raster checks for the analytic disk-intersection geometry.

Everything here works from the raw centers and radius only; nothing is
shared with the arc construction in :mod:`censorloc.region`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import InvalidInput, OracleResolutionError
from .geometry import Point, as_points

DEFAULT_H_FACTOR = 0.005
_ROW_CHUNK = 256


@dataclass(frozen=True)
class GridSpec:
    """Square cells of side ``h`` tiling ``[xmin, xmax] x [ymin, ymax]``."""

    h: float
    xmin: float
    xmax: float
    ymin: float
    ymax: float

    def __post_init__(self):
        if not (self.h > 0 and math.isfinite(self.h)):
            raise InvalidInput("grid step must be positive")
        if not (self.xmax >= self.xmin and self.ymax >= self.ymin):
            raise InvalidInput("grid bounds are inverted")

    @property
    def shape(self) -> tuple[int, int]:
        nx = max(1, math.ceil((self.xmax - self.xmin) / self.h))
        ny = max(1, math.ceil((self.ymax - self.ymin) / self.h))
        return ny, nx

    def axes(self) -> tuple[np.ndarray, np.ndarray]:
        ny, nx = self.shape
        xs = self.xmin + (np.arange(nx) + 0.5) * self.h
        ys = self.ymin + (np.arange(ny) + 0.5) * self.h
        return xs, ys


class OracleResult(NamedTuple):
    area: float
    centroid: Point
    cells: int
    error_bound: float


def _box(centers: list[Point], R: float) -> tuple[float, float, float, float]:
    """Intersection of the bounding boxes of all disks."""
    return (
        max(c.x for c in centers) - R,
        min(c.x for c in centers) + R,
        max(c.y for c in centers) - R,
        min(c.y for c in centers) + R,
    )


def grid_for(centers: Iterable[Sequence[float]], R: float, h: float | None = None,
             leave_one_out: bool = False) -> GridSpec:
    """A grid covering the disk intersection, padded by one cell.

    With ``leave_one_out`` the grid also covers every intersection that omits
    a single disk.
    """
    pts = as_points(centers)
    if not pts:
        raise InvalidInput("at least one center is required")
    h = DEFAULT_H_FACTOR * R if h is None else float(h)
    if leave_one_out and len(pts) > 1:
        boxes = [_box(pts[:j] + pts[j + 1:], R) for j in range(len(pts))]
        x0 = min(b[0] for b in boxes)
        x1 = max(b[1] for b in boxes)
        y0 = min(b[2] for b in boxes)
        y1 = max(b[3] for b in boxes)
    else:
        x0, x1, y0, y1 = _box(pts, R)
    if x1 < x0 or y1 < y0:
        x1, y1 = x0, y0
    return GridSpec(h, x0 - h, x1 + h, y0 - h, y1 + h)


def _disk_masks(C: np.ndarray, R: float, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Boolean array (disk, row, col): cell center inside the closed disk."""
    dx2 = (xs[None, :] - C[:, 0, None]) ** 2
    dy2 = (ys[None, :] - C[:, 1, None]) ** 2
    return dx2[:, None, :] + dy2[:, :, None] <= R * R


def oracle_area_centroid(centers: Iterable[Sequence[float]], R: float,
                         grid: GridSpec | None = None) -> OracleResult:
    """Rasterized area and centroid of the disk intersection.

    A cell belongs to the region when its center is within ``R`` of every
    disk center.  The area error is at most about ``h`` times the perimeter,
    reported as ``h * 2 * pi * R``.
    """
    pts = as_points(centers)
    if grid is None:
        grid = grid_for(pts, R)
    C = np.array(pts, dtype=float)
    xs, ys = grid.axes()
    count = 0
    sx = 0
    sy = 0
    for r0 in range(0, len(ys), _ROW_CHUNK):
        rows = ys[r0:r0 + _ROW_CHUNK]
        inside = _disk_masks(C, R, xs, rows).all(axis=0)
        iy, ix = np.nonzero(inside)
        count += len(ix)
        sx += int(ix.sum())
        sy += int((iy + r0).sum())
    if count == 0:
        raise OracleResolutionError(
            f"no grid cell (h={grid.h}) falls inside the region; refine the grid")
    h = grid.h
    cx = grid.xmin + (sx / count + 0.5) * h
    cy = grid.ymin + (sy / count + 0.5) * h
    return OracleResult(count * h * h, Point(cx, cy), count, h * 2 * math.pi * R)


def oracle_mss(centers: Iterable[Sequence[float]], R: float, grid: GridSpec | None = None) -> tuple[int, ...]:
    """Indices whose removal changes at least one raster cell of the region."""
    pts = as_points(centers)
    n = len(pts)
    if grid is None:
        grid = grid_for(pts, R, leave_one_out=True)
    C = np.array(pts, dtype=float)
    xs, ys = grid.axes()
    changed = np.zeros(n, dtype=bool)
    any_cell = False
    for r0 in range(0, len(ys), _ROW_CHUNK):
        masks = _disk_masks(C, R, xs, ys[r0:r0 + _ROW_CHUNK])
        full = masks.all(axis=0)
        any_cell = any_cell or bool(full.any())
        if n == 1:
            continue
        # prefix[j] = AND of masks[:j], suffix[j] = AND of masks[j+1:]
        prefix = np.logical_and.accumulate(masks, axis=0)
        suffix = np.logical_and.accumulate(masks[::-1], axis=0)[::-1]
        for j in range(n):
            if changed[j]:
                continue
            if j == 0:
                without = suffix[1]
            elif j == n - 1:
                without = prefix[n - 2]
            else:
                without = prefix[j - 1] & suffix[j + 1]
            changed[j] = bool(np.any(without & ~full))
    if not any_cell:
        raise OracleResolutionError(
            f"no grid cell (h={grid.h}) falls inside the region; refine the grid")
    if n == 1:
        return (0,)
    return tuple(int(j) for j in np.flatnonzero(changed))


def oracle_max_distance(centers: Iterable[Sequence[float]], R: float, p: Sequence[float],
                        samples: int = 10_000, eps: float = 1e-9) -> float:
    """Farthest distance from ``p`` over densely sampled boundary points.

    Each circle is sampled at ``samples`` angles; samples inside every disk
    lie on the region boundary.  Returns ``nan`` when no sample survives.
    """
    C = np.array(as_points(centers), dtype=float)
    t = np.linspace(0.0, 2 * math.pi, samples, endpoint=False)
    ring = np.column_stack((np.cos(t), np.sin(t))) * R
    best = -math.inf
    for c in C:
        q = ring + c
        d = np.hypot(q[:, None, 0] - C[None, :, 0], q[:, None, 1] - C[None, :, 1])
        q = q[np.all(d <= R + eps, axis=1)]
        if len(q):
            best = max(best, float(np.max(np.hypot(q[:, 0] - p[0], q[:, 1] - p[1]))))
    return best if best > -math.inf else math.nan
