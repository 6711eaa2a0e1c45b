import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from complexdiff.planar import Polygon2

settings.register_profile(
    "default", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


coord = st.floats(-5, 5, allow_nan=False, allow_infinity=False)


@st.composite
def polygons(draw, min_points: int = 3, max_points: int = 9):
    """Convex polygons with at least three vertices, drawn as hulls of random points."""
    n = draw(st.integers(min_points, max_points))
    pts = np.array(draw(st.lists(st.tuples(coord, coord), min_size=n, max_size=n)))
    P = Polygon2(pts)
    from hypothesis import assume

    assume(len(P) >= 3)
    e = P.edges()
    assume(np.min(np.linalg.norm(e, axis=1)) > 1e-3)
    return P


@st.composite
def seeded_polygons(draw, n_points: int = 7):
    from complexdiff.planar import random_polygon

    seed = draw(st.integers(0, 2**32 - 1))
    return random_polygon(np.random.default_rng(seed), n_points)


_CRITERIA: list[str] = []


@pytest.fixture
def criterion(request):
    """Records one PASS/FAIL line per acceptance criterion for the terminal summary."""

    def record(number: int, title: str, ok: bool, detail: str = "") -> bool:
        line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {title}"
        _CRITERIA.append(f"{line} ({detail})" if detail else line)
        print(_CRITERIA[-1])
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
