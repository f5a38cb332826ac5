"""Exact intersection of congruent closed disks.

The intersection of radius-``R`` disks is convex and bounded by circular arcs.
It is stored as a CCW cycle of vertices (pairwise circle crossings) joined by
arcs, each arc tagged with the disk that owns it.  Area and centroid follow
from the vertex polygon plus one circular segment per arc.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import InvalidInput
from .geometry import EPS, Point, as_points, polygon_area_centroid

TWO_PI = 2.0 * math.pi
# Smallest arc extent (radians) for a disk to count as contributing.
ANGULAR_EPS = 1e-9


class RegionKind(str, enum.Enum):
    FULL = "full"
    POLYARC = "polyarc"
    POINT = "point"


class Arc(NamedTuple):
    """Boundary arc traversed CCW about ``generators[owner]``."""

    owner: int
    start_angle: float
    extent: float

    @property
    def end_angle(self) -> float:
        return self.start_angle + self.extent

    def spans(self, angle: float) -> bool:
        return (angle - self.start_angle) % TWO_PI <= self.extent


@dataclass(frozen=True)
class ConvexArcRegion:
    """Non-empty intersection of closed disks of a common radius.

    ``centers`` holds every distinct input center (lexicographic order) and is
    what membership is tested against.  ``generators`` is the subset owning a
    boundary arc; ``generator_indices`` maps them back to positions in the
    caller's input list.  For a POLYARC region, arc ``i`` runs from
    ``vertices[i]`` to ``vertices[i + 1]`` (cyclic).
    """

    radius: float
    centers: tuple[Point, ...]
    generators: tuple[Point, ...]
    generator_indices: tuple[int, ...]
    vertices: tuple[Point, ...]
    arcs: tuple[Arc, ...]
    kind: RegionKind

    @property
    def area(self) -> float:
        return region_area(self)

    @property
    def centroid(self) -> Point:
        return region_centroid(self)

    def __contains__(self, p) -> bool:
        return region_contains(self, p)


def _dedupe(points: list[Point], tol: float) -> tuple[list[Point], list[int]]:
    """Distinct points in lexicographic order, each with its first input index.

    Points within ``tol`` of an earlier kept point are merged into it.
    """
    first: dict[Point, int] = {}
    for i, p in enumerate(points):
        first.setdefault(p, i)
    uniq: list[Point] = []
    idx: list[int] = []
    for p in sorted(first):
        for k, q in enumerate(uniq):
            if abs(p.x - q.x) <= tol and math.hypot(p.x - q.x, p.y - q.y) <= tol:
                idx[k] = min(idx[k], first[p])
                break
        else:
            uniq.append(p)
            idx.append(first[p])
    return uniq, idx


def _cluster(points: np.ndarray, tol: float) -> np.ndarray:
    """Merge points closer than ``tol``; keeps the lexicographically first of each group."""
    order = np.lexsort((points[:, 1], points[:, 0]))
    kept: list[np.ndarray] = []
    for k in order:
        p = points[k]
        if any(abs(p[0] - q[0]) <= tol and math.hypot(p[0] - q[0], p[1] - q[1]) <= tol for q in kept):
            continue
        kept.append(p)
    return np.array(kept)


def intersect_disks(centers: Iterable[Sequence[float]], R: float, eps: float = EPS) -> ConvexArcRegion | None:
    """Intersection of the closed disks ``B_R(c)``; ``None`` if it is empty.

    Centers closer than ``eps`` are merged (the lowest input index is kept).  A pair of centers at distance
    ``2R`` (within ``eps``) pins the region to a single point.
    """
    pts = as_points(centers)
    if not pts:
        raise InvalidInput("at least one disk center is required")
    R = float(R)
    if not (math.isfinite(R) and R > 0):
        raise InvalidInput(f"radius must be positive, got {R}")

    uniq, first_idx = _dedupe(pts, eps)
    m = len(uniq)
    if m == 1:
        return ConvexArcRegion(
            radius=R, centers=tuple(uniq), generators=tuple(uniq),
            generator_indices=(first_idx[0],), vertices=(),
            arcs=(Arc(0, 0.0, TWO_PI),), kind=RegionKind.FULL,
        )

    C = np.array(uniq, dtype=float)
    iu, ju = np.triu_indices(m, 1)
    a, b = C[iu], C[ju]
    d = np.hypot(b[:, 0] - a[:, 0], b[:, 1] - a[:, 1])
    if np.any(d > 2 * R + eps):
        return None

    tangent = d >= 2 * R - eps
    if np.any(tangent):
        k = int(np.argmax(tangent))
        p = (a[k] + b[k]) / 2
        return _point_region(C, uniq, first_idx, p, R, eps)

    # Pairwise circle crossings (a is lexicographically below b, so each
    # crossing is computed the same way whatever the input order).
    u = (b - a) / d[:, None]
    perp = np.column_stack((-u[:, 1], u[:, 0]))
    h = np.sqrt(np.maximum(R * R - (d / 2) ** 2, 0.0))
    mid = (a + b) / 2
    cand = np.vstack((mid + h[:, None] * perp, mid - h[:, None] * perp))
    dist = np.hypot(cand[:, None, 0] - C[None, :, 0], cand[:, None, 1] - C[None, :, 1])
    cand = cand[np.all(dist <= R + eps, axis=1)]
    if len(cand) == 0:
        return None

    verts = _cluster(cand, eps * max(1.0, R))
    if len(verts) == 1:
        return _point_region(C, uniq, first_idx, verts[0], R, eps)

    cx = math.fsum(verts[:, 0]) / len(verts)
    cy = math.fsum(verts[:, 1]) / len(verts)
    verts = verts[np.argsort(np.arctan2(verts[:, 1] - cy, verts[:, 0] - cx), kind="stable")]

    vdist = np.hypot(verts[:, None, 0] - C[None, :, 0], verts[:, None, 1] - C[None, :, 1])
    on_circle = np.abs(vdist - R) <= eps * max(1.0, R)

    nv = len(verts)
    raw_arcs: list[tuple[int, float, float]] = []
    for k in range(nv):
        v0, v1 = verts[k], verts[(k + 1) % nv]
        common = np.flatnonzero(on_circle[k] & on_circle[(k + 1) % nv])
        if len(common) == 0:
            common = np.flatnonzero(on_circle[k] | on_circle[(k + 1) % nv])
        raw_arcs.append(_pick_owner(C, common, v0, v1, R))

    # a vertex between two arcs of the same circle is not a real corner
    k = 0
    while len(raw_arcs) > 1 and k < len(raw_arcs):
        nxt = (k + 1) % len(raw_arcs)
        if raw_arcs[k][0] == raw_arcs[nxt][0]:
            c, s0, e0 = raw_arcs[k]
            raw_arcs[k] = (c, s0, e0 + raw_arcs[nxt][2])
            del raw_arcs[nxt]
            verts = np.delete(verts, nxt, axis=0)
            if nxt < k:
                k -= 1
        else:
            k += 1
    nv = len(verts)

    owners = sorted({c for c, _, ext in raw_arcs if ext > ANGULAR_EPS})
    if len(owners) == 1:
        # near-coincident centers: one circle owns the whole boundary
        c = owners[0]
        return ConvexArcRegion(
            radius=R, centers=tuple(uniq), generators=(uniq[c],),
            generator_indices=(first_idx[c],), vertices=(),
            arcs=(Arc(0, 0.0, TWO_PI),), kind=RegionKind.FULL,
        )
    slot = {c: i for i, c in enumerate(owners)}
    arcs = tuple(Arc(slot[c], s, ext) for c, s, ext in raw_arcs if c in slot)
    if len(arcs) != nv:
        # an arc collapsed below the angular tolerance; drop its start vertex
        keep = [k for k, (c, _, _) in enumerate(raw_arcs) if c in slot]
        verts = verts[keep]
    return ConvexArcRegion(
        radius=R,
        centers=tuple(uniq),
        generators=tuple(uniq[c] for c in owners),
        generator_indices=tuple(first_idx[c] for c in owners),
        vertices=tuple(Point(x, y) for x, y in verts),
        arcs=arcs,
        kind=RegionKind.POLYARC,
    )


def _pick_owner(C: np.ndarray, candidates: np.ndarray, v0, v1, R: float) -> tuple[int, float, float]:
    """Circle whose CCW arc from v0 to v1 stays inside every disk."""
    best = None
    for c in candidates:
        ox, oy = C[c]
        s = math.atan2(v0[1] - oy, v0[0] - ox)
        e = math.atan2(v1[1] - oy, v1[0] - ox)
        ext = (e - s) % TWO_PI
        phi = s + ext / 2
        mx, my = ox + R * math.cos(phi), oy + R * math.sin(phi)
        score = float(np.max(np.hypot(C[:, 0] - mx, C[:, 1] - my))) - R
        if best is None or score < best[0]:
            best = (score, int(c), s, ext)
    assert best is not None
    return best[1], best[2], best[3]


def _point_region(C, uniq, first_idx, p, R, eps) -> ConvexArcRegion | None:
    dist = np.hypot(C[:, 0] - p[0], C[:, 1] - p[1])
    if np.any(dist > R + eps):
        return None
    owners = [int(k) for k in np.flatnonzero(np.abs(dist - R) <= eps * max(1.0, R))]
    pt = Point(p[0], p[1])
    return ConvexArcRegion(
        radius=R,
        centers=tuple(uniq),
        generators=tuple(uniq[c] for c in owners),
        generator_indices=tuple(first_idx[c] for c in owners),
        vertices=(pt,),
        arcs=(),
        kind=RegionKind.POINT,
    )


def _segment_excess(theta: float) -> float:
    """theta - sin(theta), with a series near zero where the difference cancels."""
    if theta < 1e-2:
        t2 = theta * theta
        return theta * t2 * (1 / 6 - t2 * (1 / 120 - t2 * (1 / 5040 - t2 / 362880)))
    return theta - math.sin(theta)


def _segments(T: ConvexArcRegion) -> list[tuple[float, float, float]]:
    """(area, cx, cy) for the circular segment cut off by each arc's chord."""
    R = T.radius
    out = []
    for arc in T.arcs:
        ox, oy = T.generators[arc.owner]
        theta = arc.extent
        excess = _segment_excess(theta)
        area = 0.5 * R * R * excess
        dist = 4 * R * math.sin(theta / 2) ** 3 / (3 * excess)
        phi = arc.start_angle + theta / 2
        out.append((area, ox + dist * math.cos(phi), oy + dist * math.sin(phi)))
    return out


def region_area(T: ConvexArcRegion) -> float:
    if T.kind is RegionKind.FULL:
        return math.pi * T.radius ** 2
    if T.kind is RegionKind.POINT:
        return 0.0
    poly_area, _ = polygon_area_centroid(T.vertices)
    return math.fsum([poly_area] + [s[0] for s in _segments(T)])


def region_centroid(T: ConvexArcRegion | None) -> Point:
    """Center of mass of the region."""
    if T is None:
        raise InvalidInput("empty region has no centroid")
    if T.kind is RegionKind.FULL:
        return T.generators[0]
    if T.kind is RegionKind.POINT:
        return T.vertices[0]
    poly_area, pc = polygon_area_centroid(T.vertices)
    parts = [(poly_area, pc.x, pc.y)] + _segments(T)
    total = math.fsum(w for w, _, _ in parts)
    return Point(
        math.fsum(w * x for w, x, _ in parts) / total,
        math.fsum(w * y for w, _, y in parts) / total,
    )


def region_contains(T: ConvexArcRegion, p: Sequence[float], eps: float = EPS) -> bool:
    """True iff ``p`` lies within ``R + eps`` of every input center."""
    lim = T.radius + eps
    return all(math.hypot(p[0] - c.x, p[1] - c.y) <= lim for c in T.centers)


def max_distance_to(T: ConvexArcRegion | None, p: Sequence[float]) -> float:
    """Largest distance from ``p`` to any point of the region.

    The farthest point sits either at a vertex or at the point of some arc
    diametrically opposite ``p`` with respect to the arc's owner.
    """
    if T is None:
        raise InvalidInput("empty region")
    px, py = float(p[0]), float(p[1])
    if T.kind is RegionKind.POINT:
        q = T.vertices[0]
        return math.hypot(px - q.x, py - q.y)
    best = max((math.hypot(px - v.x, py - v.y) for v in T.vertices), default=0.0)
    for arc in T.arcs:
        c = T.generators[arc.owner]
        dx, dy = c.x - px, c.y - py
        r = math.hypot(dx, dy)
        if r == 0.0:
            best = max(best, T.radius)
        elif arc.spans(math.atan2(dy, dx)):
            best = max(best, r + T.radius)
    return best


def sample_boundary(T: ConvexArcRegion, per_arc: int = 32) -> list[Point]:
    """Points spread evenly in angle along every boundary arc."""
    if T.kind is RegionKind.POINT:
        return [T.vertices[0]]
    R = T.radius
    out = []
    for arc in T.arcs:
        c = T.generators[arc.owner]
        for t in np.linspace(0.0, 1.0, per_arc, endpoint=False):
            a = arc.start_angle + t * arc.extent
            out.append(Point(c.x + R * math.cos(a), c.y + R * math.sin(a)))
    return out
