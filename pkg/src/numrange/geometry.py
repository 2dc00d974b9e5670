"""Planar convex geometry on point sets encoded as complex numbers.

Convex polygons are stored counterclockwise with collinear interior points
removed.  Degenerate regions are allowed: a single point or a two-point
segment are valid polygons.  Hausdorff distances are between the *filled*
regions; for convex sets the maximum of the point-to-region distance is
attained at a vertex, so vertex sweeps are exact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "RangePolygon",
    "convex_hull",
    "distance_to_region",
    "hausdorff",
    "contains",
    "support_width",
    "polygon_to_csv",
    "polygon_from_csv",
]

CROSS_TOL = 1e-12


@dataclass(frozen=True)
class RangePolygon:
    """Convex polygon: counterclockwise vertices as a complex array."""

    vertices: np.ndarray

    def __post_init__(self):
        v = np.atleast_1d(np.asarray(self.vertices, dtype=complex))
        if v.size < 1:
            raise ValueError("a polygon needs at least one vertex")
        if not np.isfinite(v).all():
            raise ValueError("polygon vertices must be finite")
        object.__setattr__(self, "vertices", v)

    def __len__(self) -> int:
        return self.vertices.size


def _cross(o: complex, a: complex, b: complex) -> float:
    return (a.real - o.real) * (b.imag - o.imag) - (a.imag - o.imag) * (b.real - o.real)


def _monotone_chain(pts: np.ndarray) -> np.ndarray:
    order = np.lexsort((pts.imag, pts.real))
    pts = pts[order]
    eps = CROSS_TOL * max(1.0, float(np.abs(pts).max()))
    lower: list[complex] = []
    for z in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], z) <= eps:
            lower.pop()
        lower.append(z)
    upper: list[complex] = []
    for z in pts[::-1]:
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], z) <= eps:
            upper.pop()
        upper.append(z)
    out = np.array(lower[:-1] + upper[:-1], dtype=complex)
    if out.size == 0 or np.abs(out - out[0]).max() <= eps:
        return pts[:1]
    if out.size == 2 and abs(out[1] - out[0]) <= eps:
        return out[:1]
    return out


def _prune_interior(pts: np.ndarray) -> np.ndarray:
    """Akl-Toussaint style pruning: drop points strictly inside the polygon
    of extreme points along eight directions.  Output contains every hull
    vertex of the input."""
    keys = (
        pts.real,
        -pts.real,
        pts.imag,
        -pts.imag,
        pts.real + pts.imag,
        pts.real - pts.imag,
        -pts.real + pts.imag,
        -pts.real - pts.imag,
    )
    corners = pts[np.unique([int(np.argmax(k)) for k in keys])]
    poly = _monotone_chain(corners)
    if poly.size < 3:
        return pts
    a = poly
    b = np.roll(poly, -1)
    margin = CROSS_TOL * max(1.0, float(np.abs(poly).max()))
    cr = (b - a).real[None, :] * (pts[:, None] - a[None, :]).imag - (b - a).imag[
        None, :
    ] * (pts[:, None] - a[None, :]).real
    strictly_inside = (cr > margin).all(axis=1)
    return np.concatenate([pts[~strictly_inside], poly])


def convex_hull(points) -> RangePolygon:
    """Convex hull of a set of complex points (monotone chain).

    Collinear interior points are removed; collinear input collapses to its
    two extreme points and coincident input to a single point.
    """
    pts = np.atleast_1d(np.asarray(points, dtype=complex)).ravel()
    if pts.size == 0:
        raise ValueError("convex hull of an empty point set")
    if not np.isfinite(pts).all():
        raise ValueError("points must be finite")
    if pts.size > 512:
        pts = _prune_interior(pts)
    return RangePolygon(_monotone_chain(pts))


def distance_to_region(points, polygon: RangePolygon, _chunk: int = 512) -> np.ndarray:
    """Euclidean distance from each point to the filled convex polygon.

    Points are processed in chunks so point-set x polygon products stay
    memory-bounded.
    """
    zs = np.atleast_1d(np.asarray(points, dtype=complex)).ravel()
    v = polygon.vertices
    if v.size == 1:
        return np.abs(zs - v[0])
    a = v
    b = np.roll(v, -1)
    ab = (b - a)[None, :]
    seg_len2 = np.where(np.abs(ab) ** 2 == 0.0, 1.0, np.abs(ab) ** 2)
    margin = CROSS_TOL * max(1.0, float(np.abs(v).max()))
    out = np.empty(zs.size, dtype=float)
    for start in range(0, zs.size, _chunk):
        az = zs[start : start + _chunk, None] - a[None, :]
        t = np.clip((az.real * ab.real + az.imag * ab.imag) / seg_len2, 0.0, 1.0)
        dmin = np.abs(az - t * ab).min(axis=1)
        if v.size >= 3:
            inside = (ab.real * az.imag - ab.imag * az.real >= -margin).all(axis=1)
            dmin = np.where(inside, 0.0, dmin)
        out[start : start + _chunk] = dmin
    return out


def hausdorff(p: RangePolygon, q: RangePolygon) -> float:
    """Hausdorff distance between two filled convex polygons."""
    return float(
        max(
            distance_to_region(p.vertices, q).max(),
            distance_to_region(q.vertices, p).max(),
        )
    )


def contains(polygon: RangePolygon, z: complex, tol: float = 0.0) -> bool:
    """True when ``z`` lies within distance ``tol`` of the filled region."""
    return bool(distance_to_region(np.array([z]), polygon)[0] <= tol)


def support_width(polygon: RangePolygon, theta: float) -> float:
    """Support value ``max Re(z e^{-i theta})`` over the region."""
    return float((polygon.vertices * np.exp(-1j * theta)).real.max())


def polygon_to_csv(polygon: RangePolygon, path) -> None:
    """Write vertices as ``re,im`` lines (17 significant digits)."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("re,im\n")
        for z in polygon.vertices:
            fh.write(f"{z.real:.17g},{z.imag:.17g}\n")


def polygon_from_csv(path) -> RangePolygon:
    """Read a polygon written by :func:`polygon_to_csv`."""
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().strip()
        if header != "re,im":
            raise ValueError(f"unexpected CSV header {header!r}")
        vertices = []
        for line in fh:
            line = line.strip()
            if not line:
                continue
            re_s, im_s = line.split(",")
            vertices.append(complex(float(re_s), float(im_s)))
    return RangePolygon(np.array(vertices, dtype=complex))
