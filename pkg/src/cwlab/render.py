"""SVG outlines of planar bodies and OBJ point meshes of 3D bodies."""

import numpy as np
from scipy.spatial import ConvexHull

from .errors import UsageError
from .geometry_core import direction_grid

DEDUP_TOL = 1e-12


def boundary_polyline(body, m):
    """Support points at the m grid directions, consecutive repeats removed.

    Corners of a body are the support point of a whole arc of directions, so
    they would otherwise be repeated many times.
    """
    if body.dim != 2:
        raise UsageError("SVG rendering needs a planar body")
    grid = direction_grid(2, m)
    _, pts = body.support_many(grid.directions)
    keep = [0]
    for k in range(1, len(pts)):
        if np.linalg.norm(pts[k] - pts[keep[-1]]) > DEDUP_TOL:
            keep.append(k)
    if len(keep) > 1 and np.linalg.norm(pts[keep[-1]] - pts[keep[0]]) <= DEDUP_TOL:
        keep.pop()
    return pts[keep]


def render_svg(body, m=720):
    pts = boundary_polyline(body, m)
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    span = np.maximum(hi - lo, 1e-9)
    pad = 0.05 * span
    x0, y0 = (float(v) for v in lo - pad)
    w, h = (float(v) for v in span + 2 * pad)
    # y axis flipped so the picture is in mathematical orientation
    view = f"{x0!r} {-(y0 + h)!r} {w!r} {h!r}"
    coords = " ".join(f"{x!r},{y!r}" for x, y in pts.tolist())
    stroke = max(w, h) / 400.0
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{view}">\n'
        '<g transform="scale(1,-1)">\n'
        f'<polygon points="{coords}" fill="none" stroke="black" stroke-width="{stroke!r}"/>\n'
        "</g>\n"
        "</svg>\n"
    ).encode()


def render_obj(body, m=2000):
    """Support points on the spiral grid, triangulated as the hull of the grid directions.

    The hull of the unit directions is the spherical Delaunay triangulation of
    the grid, so faces connect directions that are grid neighbours.
    """
    if body.dim != 3:
        raise UsageError("OBJ rendering needs a 3D body")
    grid = direction_grid(3, m)
    _, pts = body.support_many(grid.directions)
    hull = ConvexHull(grid.directions)
    d = grid.directions
    faces = []
    for tri, eq in zip(hull.simplices, hull.equations):
        a, b, c = (int(i) for i in tri)
        if np.dot(np.cross(d[b] - d[a], d[c] - d[a]), eq[:3]) < 0:
            b, c = c, b
        # rotate so the smallest index leads; keeps orientation, fixes the order
        k = int(np.argmin((a, b, c)))
        faces.append(((a, b, c) * 2)[k:k + 3])
    lines = [f"# {m} support points"]
    lines += [f"v {x!r} {y!r} {z!r}" for x, y, z in pts.tolist()]
    lines += [f"f {a + 1} {b + 1} {c + 1}" for a, b, c in sorted(faces)]
    return ("\n".join(lines) + "\n").encode()


def render(body, fmt, m=None):
    if fmt == "svg":
        return render_svg(body, 720 if m is None else m)
    if fmt == "obj":
        return render_obj(body, 2000 if m is None else m)
    raise UsageError(f"unknown render format {fmt!r}")
