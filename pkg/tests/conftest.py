import math

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from censorloc.geometry import Point
from censorloc.region import intersect_disks

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

LENS = [(0.0, 0.0), (1.0, 0.0)]
QUAD = [(0.0, 0.0), (4.0, 0.0), (4.0, 2.0), (0.0, 1.0)]


def random_instance(rng: np.random.Generator, max_n: int = 8):
    """Centers within 1.5R of the origin, redrawn until the intersection is non-empty."""
    n = int(rng.integers(1, max_n + 1))
    R = float(rng.uniform(1.0, 5.0))
    while True:
        r = 1.5 * R * np.sqrt(rng.uniform(size=n))
        a = rng.uniform(0.0, 2 * math.pi, size=n)
        centers = [Point(x, y) for x, y in zip(r * np.cos(a), r * np.sin(a))]
        T = intersect_disks(centers, R)
        if T is not None:
            return centers, R, T


@st.composite
def detection_sets(draw, max_n=12):
    """Sensors scattered inside B_R(target): always a consistent observation."""
    R = draw(st.floats(0.5, 5.0))
    tx = draw(st.floats(-20, 20))
    ty = draw(st.floats(-20, 20))
    n = draw(st.integers(1, max_n))
    pts = []
    for _ in range(n):
        u = draw(st.floats(0.0, 1.0))
        a = draw(st.floats(0.0, 2 * math.pi))
        pts.append(Point(tx + R * math.sqrt(u) * math.cos(a), ty + R * math.sqrt(u) * math.sin(a)))
    return pts, R, Point(tx, ty)


point_lists = st.lists(
    st.tuples(st.floats(-100, 100), st.floats(-100, 100)), min_size=1, max_size=40)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


# One line per acceptance criterion, printed at the end of the run.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
