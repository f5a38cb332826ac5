"""Planar convex-geometry primitives: hull, polygon moments, enclosing shapes."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import InvalidInput

# Absolute tolerance on coordinates, in meters.
EPS = 1e-9


class _PointBase(NamedTuple):
    x: float
    y: float


class Point(_PointBase):
    """A 2-D location in meters. Coordinates must be finite."""

    __slots__ = ()

    def __new__(cls, x: float, y: float) -> "Point":
        x = float(x)
        y = float(y)
        if not (math.isfinite(x) and math.isfinite(y)):
            raise InvalidInput(f"non-finite coordinate ({x}, {y})")
        return super().__new__(cls, x, y)

    def dist(self, other: Sequence[float]) -> float:
        return math.hypot(self.x - other[0], self.y - other[1])


class Circle(NamedTuple):
    center: Point
    radius: float

    def contains(self, p: Sequence[float], eps: float = EPS) -> bool:
        return self.center.dist(p) <= self.radius + eps


@dataclass(frozen=True)
class ConvexPolygon:
    """Convex polygon in canonical form: CCW, starting at the lexicographic minimum."""

    vertices: tuple[Point, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


def as_points(points: Iterable[Sequence[float]]) -> list[Point]:
    return [p if isinstance(p, Point) else Point(p[0], p[1]) for p in points]


def cross(o: Sequence[float], a: Sequence[float], b: Sequence[float]) -> float:
    """z-component of (a - o) x (b - o)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _require_points(points) -> list[Point]:
    pts = as_points(points)
    if not pts:
        raise InvalidInput("at least one point is required")
    return pts


def convex_hull(points: Iterable[Sequence[float]]) -> ConvexPolygon:
    """Corners of the convex hull (Andrew's monotone chain).

    Duplicates are merged and points lying on hull edges are dropped, so the
    result contains corners only.
    """
    pts = sorted(set(_require_points(points)))
    if len(pts) <= 2:
        return ConvexPolygon(tuple(pts))

    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return ConvexPolygon(tuple(hull))


def polygon_area_centroid(poly: ConvexPolygon | Sequence[Sequence[float]]) -> tuple[float, Point]:
    """Area and centroid of a simple CCW polygon via the shoelace formula.

    One vertex gives ``(0, vertex)``; two vertices give ``(0, midpoint)``.
    Collinear inputs with zero area fall back to the vertex average.
    """
    verts = as_points(poly.vertices if isinstance(poly, ConvexPolygon) else poly)
    if not verts:
        raise InvalidInput("polygon has no vertices")
    n = len(verts)
    if n == 1:
        return 0.0, verts[0]
    if n == 2:
        return 0.0, Point((verts[0].x + verts[1].x) / 2, (verts[0].y + verts[1].y) / 2)

    # Work relative to the first vertex to limit cancellation.
    ox, oy = verts[0]
    rel = [(p.x - ox, p.y - oy) for p in verts]
    a_terms, cx_terms, cy_terms = [], [], []
    for i in range(n):
        x0, y0 = rel[i]
        x1, y1 = rel[(i + 1) % n]
        c = x0 * y1 - x1 * y0
        a_terms.append(c)
        cx_terms.append((x0 + x1) * c)
        cy_terms.append((y0 + y1) * c)
    a2 = math.fsum(a_terms)
    if a2 == 0.0:
        return 0.0, vertex_mean(verts)
    cx = math.fsum(cx_terms) / (3.0 * a2)
    cy = math.fsum(cy_terms) / (3.0 * a2)
    return abs(a2) / 2.0, Point(ox + cx, oy + cy)


def vertex_mean(points: Sequence[Sequence[float]]) -> Point:
    pts = _require_points(points)
    n = len(pts)
    return Point(math.fsum(p.x for p in pts) / n, math.fsum(p.y for p in pts) / n)


def _circle_two(a: Point, b: Point) -> Circle:
    c = Point((a.x + b.x) / 2, (a.y + b.y) / 2)
    return Circle(c, max(c.dist(a), c.dist(b)))


def _circle_three(a: Point, b: Point, c: Point) -> Circle | None:
    bx, by = b.x - a.x, b.y - a.y
    cx, cy = c.x - a.x, c.y - a.y
    d = 2.0 * (bx * cy - by * cx)
    if d == 0.0:
        return None
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / d
    uy = (bx * c2 - cx * b2) / d
    center = Point(a.x + ux, a.y + uy)
    return Circle(center, max(center.dist(a), center.dist(b), center.dist(c)))


def _inside(circle: Circle, p: Point) -> bool:
    return circle.center.dist(p) <= circle.radius * (1 + 1e-12) + 1e-14


def min_enclosing_circle(points: Iterable[Sequence[float]]) -> Circle:
    """Smallest circle containing every point (Welzl's incremental method).

    The computation runs on the canonical hull corners, shuffled with a fixed
    seed, so the result does not depend on the input order.
    """
    corners = list(convex_hull(points).vertices)
    if len(corners) == 1:
        return Circle(corners[0], 0.0)
    rng = random.Random(0x5EC)
    rng.shuffle(corners)

    circle = Circle(corners[0], 0.0)
    for i, p in enumerate(corners):
        if _inside(circle, p):
            continue
        circle = Circle(p, 0.0)
        for j in range(i):
            q = corners[j]
            if _inside(circle, q):
                continue
            circle = _circle_two(p, q)
            for k in range(j):
                r = corners[k]
                if _inside(circle, r):
                    continue
                c3 = _circle_three(p, q, r)
                if c3 is None:
                    # collinear triple: the widest pair spans the others
                    c3 = max((_circle_two(p, q), _circle_two(p, r), _circle_two(q, r)),
                             key=lambda c: c.radius)
                circle = c3
    return circle


def bounding_rectangle_center(points: Iterable[Sequence[float]]) -> Point:
    """Center of the axis-aligned bounding box."""
    pts = _require_points(points)
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    return Point((min(xs) + max(xs)) / 2, (min(ys) + max(ys)) / 2)


def exterior_angles(poly: ConvexPolygon) -> list[float]:
    """Turning angle at each corner of a CCW polygon with >= 3 corners."""
    v = poly.vertices
    n = len(v)
    out = []
    for i in range(n):
        prev, cur, nxt = v[i - 1], v[i], v[(i + 1) % n]
        ax, ay = cur.x - prev.x, cur.y - prev.y
        bx, by = nxt.x - cur.x, nxt.y - cur.y
        out.append(math.atan2(ax * by - ay * bx, ax * bx + ay * by))
    return out


def steiner_center(points: Iterable[Sequence[float]]) -> Point:
    """Steiner curvature centroid of the hull corners.

    Each corner is weighted by its exterior angle; the weights sum to 2*pi.
    Hulls with one or two corners return the corner average.
    """
    hull = convex_hull(points)
    if len(hull) < 3:
        return vertex_mean(hull.vertices)
    theta = exterior_angles(hull)
    total = 2.0 * math.pi
    sx = math.fsum(t * p.x for t, p in zip(theta, hull.vertices)) / total
    sy = math.fsum(t * p.y for t, p in zip(theta, hull.vertices)) / total
    return Point(sx, sy)
