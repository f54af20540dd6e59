import numpy as np
import pytest

from cwlab import UsageError
from cwlab.geometry_core import as_direction, direction_grid


def test_planar_grid_angles():
    g = direction_grid(2, 4)
    expected = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    np.testing.assert_allclose(g.directions, expected, atol=1e-15)
    g3 = direction_grid(2, 3)
    angles = np.arctan2(g3.directions[:, 1], g3.directions[:, 0]) % (2 * np.pi)
    np.testing.assert_allclose(angles, [0, 2 * np.pi / 3, 4 * np.pi / 3], atol=1e-15)


def test_spatial_grid_covers_sphere():
    g = direction_grid(3, 100)
    d = g.directions
    np.testing.assert_allclose(np.linalg.norm(d, axis=1), 1.0, atol=1e-12)
    # brute-force nearest-neighbour scan
    worst = 0.0
    for i in range(len(d)):
        ang = [np.arccos(np.clip(d[i] @ d[j], -1, 1)) for j in range(len(d)) if j != i]
        worst = max(worst, min(ang))
    assert worst < 0.45


def test_spatial_grid_formula():
    g = direction_grid(3, 16)
    i = 5
    z = 1 - (2 * i + 1) / 16
    a = i * np.pi * (3 - np.sqrt(5))
    rho = np.sqrt(1 - z * z)
    np.testing.assert_allclose(g.directions[i], [rho * np.cos(a), rho * np.sin(a), z], atol=1e-15)


@pytest.mark.parametrize("dim,m", [(2, 7), (3, 20000)])
def test_grid_is_bit_deterministic(dim, m):
    a, b = direction_grid(dim, m), direction_grid(dim, m)
    assert a.directions.tobytes() == b.directions.tobytes()


@pytest.mark.parametrize("dim,m", [(2, 2), (3, 15), (4, 100), (2, 3.5), (2, True)])
def test_grid_rejects_bad_input(dim, m):
    with pytest.raises(UsageError):
        direction_grid(dim, m)


def test_grid_is_read_only():
    g = direction_grid(2, 8)
    with pytest.raises(ValueError):
        g.directions[0, 0] = 2.0


def test_as_direction_validates_norm():
    as_direction([0.6, 0.8])
    with pytest.raises(UsageError):
        as_direction([1.0, 1.0])
    with pytest.raises(UsageError):
        as_direction([1.0, 0.0], dim=3)
