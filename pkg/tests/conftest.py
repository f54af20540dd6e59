import sys
import numpy as np
import pytest
from scipy.optimize import nnls

from cwlab import reuleaux_polygon, reuleaux_simplex, reuleaux_triangle
from cwlab.geometry_core import ball


def kkt_certificate(centers, radii, x, u, tol=1e-9):
    """Independent optimality check for max <x,u> over a ball intersection.

    ``x`` must be feasible and ``u`` a nonnegative combination of the outward
    normals ``x - c_i`` of the balls active at ``x``. Returns the NNLS residual.
    """
    C = np.asarray(centers, float)
    R = np.asarray(radii, float)
    d = np.linalg.norm(x - C, axis=1)
    assert np.all(d <= R + tol), "candidate is infeasible"
    active = np.abs(d - R) <= tol
    if not active.any():
        return np.linalg.norm(u)
    N = (x - C[active]).T
    _, res = nnls(N, np.asarray(u, float))
    return res


def random_ball_system(rng, dim, n):
    """Balls around a common interior point."""
    p = rng.normal(size=dim)
    C = p + rng.normal(size=(n, dim))
    R = np.linalg.norm(C - p, axis=1) + rng.uniform(0.1, 1.0, n)
    return C, R


def random_directions(rng, dim, m):
    U = rng.normal(size=(m, dim))
    return U / np.linalg.norm(U, axis=1)[:, None]


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def triangle():
    return reuleaux_triangle(1.0)


@pytest.fixture(scope="session")
def simplex():
    return reuleaux_simplex()


@pytest.fixture(scope="session")
def unit_disc():
    return ball((0.0, 0.0), 1.0)


@pytest.fixture(scope="session")
def polygons():
    return {i: reuleaux_polygon(i) for i in range(1, 11)}


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.result_lines():
        terminalreporter.write_line(line)
