import math
import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from censorloc.errors import InvalidInput
from censorloc.geometry import (
    Point,
    bounding_rectangle_center,
    convex_hull,
    exterior_angles,
    min_enclosing_circle,
    polygon_area_centroid,
    steiner_center,
)

from conftest import QUAD, point_lists


def test_point_rejects_non_finite():
    with pytest.raises(InvalidInput):
        Point(float("nan"), 0)
    with pytest.raises(InvalidInput):
        Point(0, float("inf"))


class TestConvexHull:
    def test_singleton(self):
        assert convex_hull([(0, 0)]).vertices == (Point(0, 0),)

    def test_collinear_edge_point_removed(self):
        hull = convex_hull([(0, 0), (1, 0), (0.5, 0), (0.5, 0.5)])
        assert hull.vertices == (Point(0, 0), Point(1, 0), Point(0.5, 0.5))

    def test_duplicates_merged(self):
        assert convex_hull([(1, 1), (1, 1), (0, 0)]).vertices == (Point(0, 0), Point(1, 1))

    def test_square_with_interior_samples(self):
        rng = np.random.default_rng(3)
        inner = rng.uniform(0, 1, size=(100, 2)).tolist()
        corners = [(0, 0), (1, 0), (1, 1), (0, 1)]
        hull = convex_hull(inner + corners)
        assert hull.vertices == tuple(Point(*c) for c in corners)
        # brute-force membership: every sample is on the inner side of every edge
        v = hull.vertices
        for p in inner:
            for i in range(len(v)):
                a, b = v[i], v[(i + 1) % len(v)]
                assert (b.x - a.x) * (p[1] - a.y) - (b.y - a.y) * (p[0] - a.x) >= 0

    def test_empty_rejected(self):
        with pytest.raises(InvalidInput):
            convex_hull([])

    @given(point_lists)
    def test_idempotent(self, pts):
        hull = convex_hull(pts)
        assert convex_hull(hull.vertices) == hull

    @given(point_lists)
    def test_canonical_ccw(self, pts):
        v = convex_hull(pts).vertices
        assert v[0] == min(v)
        for i in range(len(v) if len(v) >= 3 else 0):
            a, b, c = v[i - 1], v[i], v[(i + 1) % len(v)]
            assert (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x) > 0


def _grid_polygon_moments(verts, h):
    """Rasterized area/centroid of a convex CCW polygon (half-plane tests)."""
    v = np.array(verts, dtype=float)
    x0, y0 = v.min(axis=0)
    x1, y1 = v.max(axis=0)
    xs = np.arange(x0 + h / 2, x1, h)
    ys = np.arange(y0 + h / 2, y1, h)
    X, Y = np.meshgrid(xs, ys)
    inside = np.ones_like(X, dtype=bool)
    for i in range(len(v)):
        a, b = v[i], v[(i + 1) % len(v)]
        inside &= (b[0] - a[0]) * (Y - a[1]) - (b[1] - a[1]) * (X - a[0]) >= 0
    return inside.sum() * h * h, X[inside].mean(), Y[inside].mean()


class TestPolygonAreaCentroid:
    def test_unit_square(self):
        area, c = polygon_area_centroid([(0, 0), (1, 0), (1, 1), (0, 1)])
        assert area == pytest.approx(1.0)
        assert c == pytest.approx((0.5, 0.5))

    def test_quadrilateral_by_decomposition(self):
        # rectangle [0,4]x[0,1] plus triangle (0,1),(4,1),(4,2)
        parts = [(4.0, (2.0, 0.5)), (2.0, (8 / 3, 4 / 3))]
        area = sum(a for a, _ in parts)
        cx = sum(a * c[0] for a, c in parts) / area
        cy = sum(a * c[1] for a, c in parts) / area
        got_area, got_c = polygon_area_centroid(QUAD)
        assert got_area == pytest.approx(6.0)
        assert area == 6.0
        assert got_c == pytest.approx((cx, cy), abs=1e-12)
        assert got_c == pytest.approx((2.2222, 0.7778), abs=1e-4)

    def test_degenerate(self):
        assert polygon_area_centroid([(0, 0), (2, 0)]) == (0.0, Point(1, 0))
        assert polygon_area_centroid([(3, 4)]) == (0.0, Point(3, 4))

    @given(st.lists(st.tuples(st.floats(-10, 10), st.floats(-10, 10)), min_size=3, max_size=15))
    def test_matches_grid(self, pts):
        hull = convex_hull(pts)
        area, c = polygon_area_centroid(hull)
        if len(hull) < 3 or area < 1.0:
            return
        h = 0.02
        ga, gx, gy = _grid_polygon_moments(hull.vertices, h)
        perimeter = sum(hull.vertices[i].dist(hull.vertices[i - 1]) for i in range(len(hull)))
        assert abs(area - ga) <= h * perimeter
        assert math.hypot(c.x - gx, c.y - gy) <= 2 * h * perimeter / math.sqrt(area)


class TestMinEnclosingCircle:
    def test_pair(self):
        c = min_enclosing_circle([(0, 0), (2, 0)])
        assert c.center == pytest.approx((1, 0))
        assert c.radius == pytest.approx(1)

    def test_right_triangle_uses_hypotenuse(self):
        c = min_enclosing_circle([(0, 0), (1, 0), (0.5, 0.5)])
        assert c.center == pytest.approx((0.5, 0.0))
        assert c.radius == pytest.approx(0.5)

    def test_singleton(self):
        c = min_enclosing_circle([(3, 4)])
        assert c.center == Point(3, 4) and c.radius == 0

    def test_empty_rejected(self):
        with pytest.raises(InvalidInput):
            min_enclosing_circle([])

    @given(point_lists)
    def test_encloses_and_is_tight(self, pts):
        c = min_enclosing_circle(pts)
        scale = max(1.0, c.radius)
        assert all(c.center.dist(p) <= c.radius + 1e-9 * scale for p in pts)
        if c.radius > 0:
            shrunk = c.radius * (1 - 1e-6)
            assert any(c.center.dist(p) > shrunk for p in pts)

    @given(point_lists, st.randoms(use_true_random=False))
    def test_order_invariant(self, pts, rnd):
        base = min_enclosing_circle(pts)
        for _ in range(10):
            shuffled = list(pts)
            rnd.shuffle(shuffled)
            c = min_enclosing_circle(shuffled)
            assert c.center.dist(base.center) <= 1e-12
            assert abs(c.radius - base.radius) <= 1e-12

    def test_against_brute_force(self):
        rnd = random.Random(11)
        for _ in range(50):
            pts = [Point(rnd.uniform(-5, 5), rnd.uniform(-5, 5)) for _ in range(rnd.randint(2, 9))]
            # brute force: smallest enclosing circle over all pair/triple candidates
            best = math.inf
            n = len(pts)
            for i in range(n):
                for j in range(i + 1, n):
                    cx, cy = (pts[i].x + pts[j].x) / 2, (pts[i].y + pts[j].y) / 2
                    r = max(math.hypot(p.x - cx, p.y - cy) for p in pts)
                    best = min(best, r)
                    for k in range(j + 1, n):
                        a, b, c = pts[i], pts[j], pts[k]
                        d = 2 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y))
                        if abs(d) < 1e-12:
                            continue
                        ux = ((a.x ** 2 + a.y ** 2) * (b.y - c.y) + (b.x ** 2 + b.y ** 2) * (c.y - a.y)
                              + (c.x ** 2 + c.y ** 2) * (a.y - b.y)) / d
                        uy = ((a.x ** 2 + a.y ** 2) * (c.x - b.x) + (b.x ** 2 + b.y ** 2) * (a.x - c.x)
                              + (c.x ** 2 + c.y ** 2) * (b.x - a.x)) / d
                        best = min(best, max(math.hypot(p.x - ux, p.y - uy) for p in pts))
            assert min_enclosing_circle(pts).radius == pytest.approx(best, rel=1e-9)


class TestBoundingRectangle:
    def test_triangle(self):
        assert bounding_rectangle_center([(0, 0), (1, 0), (0.5, 0.5)]) == pytest.approx((0.5, 0.25))

    def test_singleton(self):
        assert bounding_rectangle_center([(3, 4)]) == Point(3, 4)

    def test_forced_extremes(self):
        rng = np.random.default_rng(5)
        pts = rng.uniform(-5, 5, size=(1000, 2)).tolist() + [(-5, -5), (5, 5)]
        assert bounding_rectangle_center(pts) == pytest.approx((0, 0), abs=1e-12)

    def test_empty_rejected(self):
        with pytest.raises(InvalidInput):
            bounding_rectangle_center([])


class TestSteiner:
    def test_square(self):
        assert steiner_center([(0, 0), (1, 0), (1, 1), (0, 1)]) == pytest.approx((0.5, 0.5))

    def test_quadrilateral(self):
        # turning angles: pi/2, pi/2, pi - atan(4), atan(4)
        t3, t4 = math.pi - math.atan(4), math.atan(4)
        ex = (math.pi / 2 * 4 + t3 * 4) / (2 * math.pi)
        ey = (t3 * 2 + t4 * 1) / (2 * math.pi)
        got = steiner_center(QUAD)
        assert got == pytest.approx((ex, ey), abs=1e-12)
        assert got == pytest.approx((2.1560, 0.7890), abs=1e-4)

    def test_degenerate_pair(self):
        assert steiner_center([(0, 0), (2, 0)]) == pytest.approx((1, 0))

    def test_empty_rejected(self):
        with pytest.raises(InvalidInput):
            steiner_center([])

    @given(point_lists)
    def test_angles_sum_to_full_turn(self, pts):
        hull = convex_hull(pts)
        if len(hull) >= 3:
            assert math.fsum(exterior_angles(hull)) == pytest.approx(2 * math.pi, abs=1e-9)
