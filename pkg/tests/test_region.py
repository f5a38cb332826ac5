import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from censorloc.errors import InvalidInput
from censorloc.geometry import Point
from censorloc.oracle import grid_for, oracle_area_centroid, oracle_max_distance
from censorloc.region import (
    RegionKind,
    intersect_disks,
    max_distance_to,
    region_area,
    region_centroid,
    region_contains,
    sample_boundary,
)

from conftest import LENS, detection_sets, random_instance

LENS_AREA = 2 * math.pi / 3 - math.sqrt(3) / 2


class TestIntersectDisks:
    def test_single_disk(self):
        T = intersect_disks([(3, 4)], 2)
        assert T.kind is RegionKind.FULL
        assert region_area(T) == pytest.approx(4 * math.pi)
        assert region_centroid(T) == Point(3, 4)

    def test_lens_vertices(self):
        T = intersect_disks(LENS, 1)
        assert T.kind is RegionKind.POLYARC
        assert len(T.arcs) == 2
        assert sorted(T.vertices) == pytest.approx(
            [(0.5, -math.sqrt(3) / 2), (0.5, math.sqrt(3) / 2)], abs=1e-15)

    def test_disjoint(self):
        assert intersect_disks([(0, 0), (3, 0)], 1) is None

    def test_tangent_pair_is_point(self):
        T = intersect_disks([(0, 0), (2, 0)], 1)
        assert T.kind is RegionKind.POINT
        assert T.vertices == (Point(1, 0),)
        assert region_area(T) == 0
        assert region_centroid(T) == Point(1, 0)

    def test_tangency_window(self):
        assert intersect_disks([(0, 0), (2 + 5e-10, 0)], 1).kind is RegionKind.POINT
        assert intersect_disks([(0, 0), (2 + 5e-9, 0)], 1) is None

    def test_tangent_pair_blocked_by_third_disk(self):
        assert intersect_disks([(0, 0), (2, 0), (1, 1.5)], 1) is None

    def test_pairwise_overlap_without_common_point(self):
        # three unit disks meeting pairwise but with an empty triple intersection
        s = 1.9
        centers = [(0, 0), (s, 0), (s / 2, s * math.sqrt(3) / 2)]
        assert intersect_disks(centers, 1) is None

    def test_duplicates_merged(self):
        T = intersect_disks([(0, 0), (1, 0), (0, 0)], 1)
        assert T.generator_indices == (0, 1)
        assert region_area(T) == pytest.approx(LENS_AREA)

    def test_bad_radius(self):
        with pytest.raises(InvalidInput):
            intersect_disks(LENS, 0)
        with pytest.raises(InvalidInput):
            intersect_disks([], 1)

    def test_input_order_irrelevant(self, rng):
        for _ in range(30):
            centers, R, T = random_instance(rng)
            perm = [centers[i] for i in rng.permutation(len(centers))]
            T2 = intersect_disks(perm, R)
            assert T2.vertices == T.vertices
            assert T2.arcs == T.arcs


class TestAreaCentroid:
    def test_lens_area_closed_form(self):
        assert region_area(intersect_disks(LENS, 1)) == pytest.approx(LENS_AREA, abs=1e-12)
        assert LENS_AREA == pytest.approx(1.228370, abs=1e-6)

    def test_lens_centroid_symmetric(self):
        assert region_centroid(intersect_disks(LENS, 1)) == pytest.approx((0.5, 0), abs=1e-12)

    def test_triangle_against_grid(self):
        centers = [(0, 0), (1, 0), (0.5, 0.8)]
        R, h = 1.05, 0.002
        T = intersect_disks(centers, R)
        g = oracle_area_centroid(centers, R, grid_for(centers, R, h))
        assert abs(region_area(T) - g.area) <= 10 * h * R
        assert region_centroid(T).dist(g.centroid) <= 10 * h

    def test_empty_centroid_rejected(self):
        with pytest.raises(InvalidInput):
            region_centroid(None)

    def test_random_against_grid(self, rng):
        for _ in range(40):
            centers, R, T = random_instance(rng)
            h = 0.005 * R
            g = oracle_area_centroid(centers, R, grid_for(centers, R, h))
            assert abs(region_area(T) - g.area) <= 10 * h * R
            assert region_centroid(T).dist(g.centroid) <= 10 * h

    def test_small_arcs_stable(self):
        # nearly coincident centers leave a sliver arc; the series branch keeps it finite
        T = intersect_disks([(0, 0), (1e-4, 0), (0.5, 0.2)], 1)
        assert math.isfinite(region_area(T))
        assert region_contains(T, region_centroid(T))


class TestContains:
    def test_lens(self):
        T = intersect_disks(LENS, 1)
        assert region_contains(T, (0.5, 0))
        assert not region_contains(T, (1.5, 0))

    def test_brute_force(self, rng):
        for _ in range(20):
            centers, R, T = random_instance(rng)
            for p in rng.uniform(-2 * R, 2 * R, size=(50, 2)):
                expect = all(math.hypot(p[0] - c.x, p[1] - c.y) <= R + 1e-9 for c in centers)
                assert region_contains(T, p) == expect


class TestMaxDistance:
    def test_disk_from_outside(self):
        assert max_distance_to(intersect_disks([(3, 0)], 1), (0, 0)) == pytest.approx(4.0)

    def test_lens_from_center(self):
        T = intersect_disks(LENS, 1)
        assert max_distance_to(T, (0.5, 0)) == pytest.approx(math.sqrt(3) / 2)

    def test_lens_from_far_side(self):
        assert max_distance_to(intersect_disks(LENS, 1), (-1, 0)) == pytest.approx(2.0)

    def test_disk_from_inside(self):
        T = intersect_disks([(1, 2)], 1.5)
        p = (1.3, 1.8)
        expect = 1.5 + math.hypot(0.3, 0.2)
        assert max_distance_to(T, p) == pytest.approx(expect)
        assert oracle_max_distance([(1, 2)], 1.5, p) == pytest.approx(expect, abs=1e-6)

    def test_empty_rejected(self):
        with pytest.raises(InvalidInput):
            max_distance_to(None, (0, 0))

    def test_against_boundary_sampling(self, rng):
        for _ in range(20):
            centers, R, T = random_instance(rng)
            for p in rng.uniform(-3 * R, 3 * R, size=(5, 2)):
                got = max_distance_to(T, p)
                ref = oracle_max_distance(centers, R, p)
                # sampling can only undershoot, by at most R * (angular step)^2 / 2 + chord
                assert ref <= got + 1e-9
                assert got - ref <= R * (2 * math.pi / 10_000) * 2


class TestInvariants:
    @given(detection_sets())
    def test_boundary_inside_all_disks(self, inst):
        pts, R, _ = inst
        T = intersect_disks(pts, R)
        for v in T.vertices:
            assert all(v.dist(c) <= R + 1e-9 for c in pts)
        for q in sample_boundary(T, 8):
            assert all(q.dist(c) <= R + 1e-9 for c in pts)

    @given(detection_sets())
    def test_arcs_well_formed(self, inst):
        pts, R, _ = inst
        T = intersect_disks(pts, R)
        assert all(0 < a.extent <= 2 * math.pi for a in T.arcs)
        owned = {a.owner for a in T.arcs if a.extent > 1e-9}
        assert owned == set(range(len(T.generators)))
        if T.kind is RegionKind.POLYARC:
            assert len(T.arcs) == len(T.vertices) >= 2
            R = T.radius
            for i, arc in enumerate(T.arcs):
                c = T.generators[arc.owner]
                start = Point(c.x + R * math.cos(arc.start_angle), c.y + R * math.sin(arc.start_angle))
                end = Point(c.x + R * math.cos(arc.end_angle), c.y + R * math.sin(arc.end_angle))
                assert start.dist(T.vertices[i]) < 1e-8
                assert end.dist(T.vertices[(i + 1) % len(T.vertices)]) < 1e-8

    @given(detection_sets(), st.randoms(use_true_random=False))
    def test_convex(self, inst, rnd):
        pts, R, _ = inst
        T = intersect_disks(pts, R)
        bd = sample_boundary(T, 16)
        for _ in range(100):
            a, b = rnd.choice(bd), rnd.choice(bd)
            assert region_contains(T, ((a.x + b.x) / 2, (a.y + b.y) / 2))

    @given(detection_sets())
    def test_centroid_inside_and_target_inside(self, inst):
        pts, R, target = inst
        T = intersect_disks(pts, R)
        assert region_contains(T, region_centroid(T))
        assert region_contains(T, target)

    @given(detection_sets(), st.floats(0, 1), st.floats(0, 2 * math.pi))
    def test_adding_disk_never_grows(self, inst, u, a):
        pts, R, target = inst
        extra = Point(target.x + R * math.sqrt(u) * math.cos(a), target.y + R * math.sqrt(u) * math.sin(a))
        before = region_area(intersect_disks(pts, R))
        after = region_area(intersect_disks(pts + [extra], R))
        assert after <= before + 1e-9

    @given(detection_sets())
    def test_rebuild_from_generators(self, inst):
        pts, R, _ = inst
        T = intersect_disks(pts, R)
        T2 = intersect_disks(T.generators, R)
        assert T2.kind == T.kind
        assert len(T2.vertices) == len(T.vertices)
        for v, w in zip(T.vertices, T2.vertices):
            assert v.dist(w) <= 1e-9
        assert [a.owner for a in T2.arcs] == [a.owner for a in T.arcs]
        for a, b in zip(T.arcs, T2.arcs):
            assert a.extent == pytest.approx(b.extent, abs=1e-9)

    @given(detection_sets(), st.floats(-30, 30), st.floats(-30, 30))
    def test_centroid_shift_equivariant(self, inst, dx, dy):
        pts, R, _ = inst
        c = region_centroid(intersect_disks(pts, R))
        moved = region_centroid(intersect_disks([(p.x + dx, p.y + dy) for p in pts], R))
        assert moved == pytest.approx((c.x + dx, c.y + dy), abs=1e-9)


def test_area_matches_dense_monte_carlo():
    """Independent check of the segment-area bookkeeping on a many-sided region."""
    rng = np.random.default_rng(9)
    R = 2.0
    a = rng.uniform(0, 2 * math.pi, 40)
    centers = np.column_stack((R * np.cos(a), R * np.sin(a))) * 0.95
    T = intersect_disks(centers.tolist(), R)
    assert len(T.arcs) > 4
    g = oracle_area_centroid(centers.tolist(), R, grid_for(centers.tolist(), R, 0.001))
    assert region_area(T) == pytest.approx(g.area, abs=g.error_bound)
