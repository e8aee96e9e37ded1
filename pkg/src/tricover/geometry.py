"""Closed-form planar geometry for disk coverage analysis.

Everything here is pure and deterministic: triangles, circular sectors and
segments, two-circle lenses, triangle centers, and exact triangle/disk
intersection areas computed by boundary integration (no sampling).

Angles are radians, lengths are plain floats, areas are length squared.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import acos, atan2, cos, hypot, isfinite, pi, sin, sqrt
from typing import Iterable, NamedTuple, Sequence

from .errors import DegenerateGeometryError, InvalidInputError

# Relative tolerance used to clamp rounding noise (radicands, acos arguments).
_EPS = 1e-12
# A triangle is degenerate when area < _DEGENERACY_FACTOR * (longest side)^2.
_DEGENERACY_FACTOR = 1e-12

_TWO_PI = 2.0 * pi


class Point(NamedTuple):
    """A point in the plane."""

    x: float
    y: float


@dataclass(frozen=True)
class TriangleGeom:
    """A triangle with its derived scalar geometry.

    Side ``a`` is opposite ``vertices[0]``, ``b`` opposite ``vertices[1]``,
    ``c`` opposite ``vertices[2]``; ``alpha``/``beta``/``zeta`` are the
    interior angles at those vertices. ``s`` is the semiperimeter.
    """

    vertices: tuple[Point, Point, Point]
    a: float
    b: float
    c: float
    alpha: float
    beta: float
    zeta: float
    s: float
    area: float
    degenerate: bool

    @property
    def sides(self) -> tuple[float, float, float]:
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class LensGeom:
    """Intersection of two disks, with the chord construction intermediates.

    ``x_chord`` is the distance from the first center to the radical chord,
    ``d1``/``d2`` the two circular-segment heights (``d1 + d2 == d`` in the
    partial-overlap branch). In the containment and disjoint branches there
    is no chord; those fields are zero there.
    """

    R: float
    r: float
    d: float
    x_chord: float
    half_chord: float
    chord_len: float
    d1: float
    d2: float
    area: float


@dataclass(frozen=True)
class TriangleCenters:
    """Circumcenter/incenter pair for a triangle."""

    circumcenter: Point
    circumradius: float
    incenter: Point
    inradius: float


def _require_finite(p: Point) -> None:
    if not (isfinite(p.x) and isfinite(p.y)):
        raise InvalidInputError(f"non-finite coordinate: {p!r}")


def _clamp01(v: float, lo: float = -1.0, hi: float = 1.0) -> float:
    return lo if v < lo else hi if v > hi else v


def heron_area(a: float, b: float, c: float) -> float:
    """Triangle area from its three side lengths.

    Returns 0.0 for degenerate (collinear) triples, including triples that
    violate the triangle inequality; tiny negative radicands produced by
    rounding are clamped to zero.
    """
    if a < 0 or b < 0 or c < 0:
        raise InvalidInputError(f"side lengths must be >= 0, got ({a}, {b}, {c})")
    s = 0.5 * (a + b + c)
    radicand = s * (s - a) * (s - b) * (s - c)
    if radicand <= 0.0:
        return 0.0
    return sqrt(radicand)


def triangle_from_vertices(p1: Point, p2: Point, p3: Point) -> TriangleGeom:
    """Build a :class:`TriangleGeom` from three vertices.

    The degeneracy flag is set when the area falls below
    ``1e-12 * (longest side)**2``; angles are reported as zero in that case.
    """
    p1, p2, p3 = Point(*p1), Point(*p2), Point(*p3)
    for p in (p1, p2, p3):
        _require_finite(p)
    a = hypot(p2.x - p3.x, p2.y - p3.y)
    b = hypot(p1.x - p3.x, p1.y - p3.y)
    c = hypot(p1.x - p2.x, p1.y - p2.y)
    area = 0.5 * abs(
        (p2.x - p1.x) * (p3.y - p1.y) - (p2.y - p1.y) * (p3.x - p1.x)
    )
    longest = max(a, b, c)
    degenerate = longest <= 0.0 or area < _DEGENERACY_FACTOR * longest * longest
    if degenerate:
        alpha = beta = zeta = 0.0
    else:
        alpha = acos(_clamp01((b * b + c * c - a * a) / (2.0 * b * c)))
        beta = acos(_clamp01((a * a + c * c - b * b) / (2.0 * a * c)))
        zeta = acos(_clamp01((a * a + b * b - c * c) / (2.0 * a * b)))
    return TriangleGeom(
        vertices=(p1, p2, p3),
        a=a,
        b=b,
        c=c,
        alpha=alpha,
        beta=beta,
        zeta=zeta,
        s=0.5 * (a + b + c),
        area=area,
        degenerate=degenerate,
    )


def sector_area(angle: float, radius: float) -> float:
    """Area of a circular sector of the given central angle."""
    if not 0.0 <= angle <= _TWO_PI:
        raise InvalidInputError(f"sector angle must be in [0, 2*pi], got {angle}")
    if radius < 0:
        raise InvalidInputError(f"radius must be >= 0, got {radius}")
    return 0.5 * angle * radius * radius


def segment_area(radius: float, dist_from_center: float) -> float:
    """Area of the circular segment cut off by a chord.

    ``dist_from_center`` is the perpendicular distance from the circle
    center to the chord; the segment is the smaller piece beyond the chord.
    """
    if radius < 0 or dist_from_center < 0:
        raise InvalidInputError(
            f"segment inputs must be >= 0, got R={radius}, d={dist_from_center}"
        )
    if dist_from_center > radius:
        raise InvalidInputError(
            f"chord distance {dist_from_center} exceeds radius {radius}"
        )
    if radius == 0.0:
        return 0.0
    return _segment_signed(radius, dist_from_center)


def _segment_signed(radius: float, height: float) -> float:
    """Circular segment area allowing a negative (majority-side) height."""
    ratio = _clamp01(height / radius)
    radicand = radius * radius - height * height
    if radicand < 0.0:
        radicand = 0.0
    return radius * radius * acos(ratio) - height * sqrt(radicand)


def lens_area(R: float, r: float, d: float) -> LensGeom:
    """Intersection area of two disks of radii ``R`` and ``r`` at center
    distance ``d``, with the chord construction intermediates.

    Branches: disjoint (``d >= R + r``) has zero area; containment
    (``d <= |R - r|``, including concentric ``d == 0``) is the smaller
    disk's full area; otherwise the area is the sum of the two circular
    segments cut by the radical chord.
    """
    if R <= 0 or r <= 0:
        raise InvalidInputError(f"radii must be > 0, got R={R}, r={r}")
    if d < 0:
        raise InvalidInputError(f"center distance must be >= 0, got {d}")
    if d <= abs(R - r):
        small = min(R, r)
        return LensGeom(R, r, d, 0.0, 0.0, 0.0, 0.0, 0.0, pi * small * small)
    if d >= R + r:
        return LensGeom(R, r, d, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0)
    x = (d * d - r * r + R * R) / (2.0 * d)
    radicand = R * R - x * x
    if radicand < 0.0:
        radicand = 0.0
    half_chord = sqrt(radicand)
    d1 = x
    d2 = d - x
    area = _segment_signed(R, d1) + _segment_signed(r, d2)
    if area < 0.0:
        area = 0.0
    return LensGeom(R, r, d, x, half_chord, 2.0 * half_chord, d1, d2, area)


def circumcenter(tri: TriangleGeom) -> tuple[Point, float]:
    """Circumcenter and circumradius (equidistant point; may lie outside)."""
    if tri.degenerate:
        raise DegenerateGeometryError("circumcenter of a degenerate triangle")
    p1, p2, p3 = tri.vertices
    bx, by = p2.x - p1.x, p2.y - p1.y
    cx, cy = p3.x - p1.x, p3.y - p1.y
    den = 2.0 * (bx * cy - by * cx)
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / den
    uy = (bx * c2 - cx * b2) / den
    return Point(p1.x + ux, p1.y + uy), hypot(ux, uy)


def incenter(tri: TriangleGeom) -> tuple[Point, float]:
    """Incenter and inradius (side-length weighted vertex average)."""
    if tri.degenerate:
        raise DegenerateGeometryError("incenter of a degenerate triangle")
    p1, p2, p3 = tri.vertices
    w = tri.a + tri.b + tri.c
    cx = (tri.a * p1.x + tri.b * p2.x + tri.c * p3.x) / w
    cy = (tri.a * p1.y + tri.b * p2.y + tri.c * p3.y) / w
    return Point(cx, cy), tri.area / tri.s


def triangle_centers(tri: TriangleGeom) -> TriangleCenters:
    """Both classic centers in one record."""
    cc, cr = circumcenter(tri)
    ic, ir = incenter(tri)
    return TriangleCenters(cc, cr, ic, ir)


def point_segment_distance(p: Point, a: Point, b: Point) -> float:
    """Distance from ``p`` to the closed segment ``a``–``b``."""
    vx, vy = b.x - a.x, b.y - a.y
    wx, wy = p.x - a.x, p.y - a.y
    seg2 = vx * vx + vy * vy
    if seg2 == 0.0:
        return hypot(wx, wy)
    t = (wx * vx + wy * vy) / seg2
    t = 0.0 if t < 0.0 else 1.0 if t > 1.0 else t
    return hypot(wx - t * vx, wy - t * vy)


def _ccw_vertices(tri: TriangleGeom) -> tuple[Point, Point, Point]:
    p1, p2, p3 = tri.vertices
    if (p2.x - p1.x) * (p3.y - p1.y) - (p2.y - p1.y) * (p3.x - p1.x) < 0.0:
        return p1, p3, p2
    return p1, p2, p3


def triangle_disk_intersection_area(
    tri: TriangleGeom, center: Point, radius: float
) -> float:
    """Exact area of ``triangle ∩ disk``.

    Per-edge boundary integration: portions of an edge inside the disk
    contribute straight-line terms, portions outside contribute the arc
    subtended at the disk center. Degenerate triangles have zero area.
    """
    if radius < 0:
        raise InvalidInputError(f"radius must be >= 0, got {radius}")
    center = Point(*center)
    _require_finite(center)
    if tri.degenerate or radius == 0.0:
        return 0.0
    verts = _ccw_vertices(tri)
    total = 0.0
    for i in range(3):
        u, v = verts[i], verts[(i + 1) % 3]
        total += _edge_disk_term(
            u.x - center.x, u.y - center.y, v.x - center.x, v.y - center.y, radius
        )
    cap = min(tri.area, pi * radius * radius)
    return _clamp01(total, 0.0, cap)


def _edge_disk_term(ax: float, ay: float, bx: float, by: float, R: float) -> float:
    """Contribution of directed segment a→b to the disk-at-origin boundary
    integral: chord (triangle) terms inside the disk, sector terms outside."""

    def tri_term(x1: float, y1: float, x2: float, y2: float) -> float:
        return 0.5 * (x1 * y2 - y1 * x2)

    def arc_term(x1: float, y1: float, x2: float, y2: float) -> float:
        ang = atan2(x1 * y2 - y1 * x2, x1 * x2 + y1 * y2)
        return 0.5 * R * R * ang

    dx, dy = bx - ax, by - ay
    A = dx * dx + dy * dy
    if A == 0.0:
        return 0.0
    B = ax * dx + ay * dy
    C = ax * ax + ay * ay - R * R
    disc = B * B - A * C
    if disc <= 0.0:
        return arc_term(ax, ay, bx, by)
    sq = sqrt(disc)
    t1 = (-B - sq) / A
    t2 = (-B + sq) / A
    if t2 <= 0.0 or t1 >= 1.0:
        return arc_term(ax, ay, bx, by)
    ta = t1 if t1 > 0.0 else 0.0
    tb = t2 if t2 < 1.0 else 1.0
    pax, pay = ax + ta * dx, ay + ta * dy
    pbx, pby = ax + tb * dx, ay + tb * dy
    total = tri_term(pax, pay, pbx, pby)
    if ta > 0.0:
        total += arc_term(ax, ay, pax, pay)
    if tb < 1.0:
        total += arc_term(pbx, pby, bx, by)
    return total


# ---------------------------------------------------------------------------
# Triangle ∩ (union of disks): exact boundary integral.
#
# The covered region's boundary consists of (a) sub-intervals of the triangle
# edges lying inside at least one disk and (b) arcs of each circle lying
# inside the triangle and outside every other disk. Both piece families are
# 1-D interval computations; Green's theorem turns them into areas.
# ---------------------------------------------------------------------------

_IvalSet = list  # list[tuple[float, float]] on [0, 2*pi), disjoint, sorted


def _normalize_arc(lo: float, length: float) -> _IvalSet:
    """Arc starting at angle ``lo`` spanning ``length`` (0..2*pi) as a set."""
    if length <= 0.0:
        return []
    if length >= _TWO_PI:
        return [(0.0, _TWO_PI)]
    lo = lo % _TWO_PI
    hi = lo + length
    if hi <= _TWO_PI:
        return [(lo, hi)]
    return [(0.0, hi - _TWO_PI), (lo, _TWO_PI)]


def _ivals_intersect(A: _IvalSet, B: _IvalSet) -> _IvalSet:
    out = []
    for a0, a1 in A:
        for b0, b1 in B:
            lo, hi = max(a0, b0), min(a1, b1)
            if hi > lo:
                out.append((lo, hi))
    out.sort()
    return out


def _ivals_complement(A: _IvalSet) -> _IvalSet:
    out = []
    cur = 0.0
    for lo, hi in sorted(A):
        if lo > cur:
            out.append((cur, lo))
        cur = max(cur, hi)
    if cur < _TWO_PI:
        out.append((cur, _TWO_PI))
    return out


def _ivals_union(sets: Iterable[_IvalSet]) -> _IvalSet:
    flat = sorted(iv for s in sets for iv in s)
    out: list[tuple[float, float]] = []
    for lo, hi in flat:
        if out and lo <= out[-1][1]:
            if hi > out[-1][1]:
                out[-1] = (out[-1][0], hi)
        else:
            out.append((lo, hi))
    return out


def _circle_in_halfplane(
    cx: float, cy: float, R: float, nx: float, ny: float, off: float
) -> _IvalSet:
    """Angles where circle point lies in the half-plane ``n·p <= off``
    (``n`` a unit vector): cos(theta - phi) <= s."""
    s = (off - (nx * cx + ny * cy)) / R
    if s >= 1.0:
        return [(0.0, _TWO_PI)]
    if s <= -1.0:
        return []
    phi = atan2(ny, nx)
    alpha = acos(_clamp01(s))
    return _normalize_arc(phi + alpha, _TWO_PI - 2.0 * alpha)


def _circle_in_disk(
    cx: float, cy: float, R: float, ox: float, oy: float, Ro: float
) -> _IvalSet:
    """Angles where circle point lies inside the other disk."""
    dx, dy = ox - cx, oy - cy
    D = hypot(dx, dy)
    if D == 0.0:
        return [(0.0, _TWO_PI)] if R <= Ro else []
    u = (D * D + R * R - Ro * Ro) / (2.0 * R * D)
    if u <= -1.0:
        return [(0.0, _TWO_PI)]
    if u >= 1.0:
        return []
    beta = acos(_clamp01(u))
    psi = atan2(dy, dx)
    return _normalize_arc(psi - beta, 2.0 * beta)


def triangle_disks_covered_area(
    tri: TriangleGeom, disks: Sequence[tuple[Point, float]]
) -> float:
    """Exact area of ``triangle ∩ (disk_1 ∪ ... ∪ disk_n)``.

    Complements :func:`triangle_disk_intersection_area` for several disks;
    with a single disk the two agree to rounding. Degenerate triangles and
    empty disk lists give zero.
    """
    if tri.degenerate:
        return 0.0
    circles = []
    for center, radius in disks:
        if radius < 0:
            raise InvalidInputError(f"radius must be >= 0, got {radius}")
        if radius > 0.0:
            p = Point(*center)
            _require_finite(p)
            circles.append((p.x, p.y, float(radius)))
    if not circles:
        return 0.0
    verts = _ccw_vertices(tri)

    # Outward unit normal and offset for each directed edge of the CCW triangle.
    edges = []
    for i in range(3):
        u, v = verts[i], verts[(i + 1) % 3]
        ex, ey = v.x - u.x, v.y - u.y
        elen = hypot(ex, ey)
        nx, ny = ey / elen, -ex / elen  # right of travel = outside for CCW
        edges.append((u, v, nx, ny, nx * u.x + ny * u.y))

    total = 0.0

    # (a) Triangle-edge pieces inside the union of disks.
    for u, v, _, _, _ in edges:
        dx, dy = v.x - u.x, v.y - u.y
        A = dx * dx + dy * dy
        spans: list[tuple[float, float]] = []
        for cx, cy, R in circles:
            wx, wy = u.x - cx, u.y - cy
            B = wx * dx + wy * dy
            C = wx * wx + wy * wy - R * R
            disc = B * B - A * C
            if disc <= 0.0:
                continue
            sq = sqrt(disc)
            t1 = max((-B - sq) / A, 0.0)
            t2 = min((-B + sq) / A, 1.0)
            if t2 > t1:
                spans.append((t1, t2))
        spans.sort()
        merged: list[tuple[float, float]] = []
        for lo, hi in spans:
            if merged and lo <= merged[-1][1]:
                if hi > merged[-1][1]:
                    merged[-1] = (merged[-1][0], hi)
            else:
                merged.append((lo, hi))
        for lo, hi in merged:
            x1, y1 = u.x + lo * dx, u.y + lo * dy
            x2, y2 = u.x + hi * dx, u.y + hi * dy
            total += 0.5 * (x1 * y2 - y1 * x2)

    # (b) Circle arcs inside the triangle and outside every other disk.
    for k, (cx, cy, R) in enumerate(circles):
        inside = [(0.0, _TWO_PI)]
        for _, _, nx, ny, off in edges:
            inside = _ivals_intersect(inside, _circle_in_halfplane(cx, cy, R, nx, ny, off))
            if not inside:
                break
        if not inside:
            continue
        others = _ivals_union(
            _circle_in_disk(cx, cy, R, ox, oy, Ro)
            for j, (ox, oy, Ro) in enumerate(circles)
            if j != k
        )
        exposed = _ivals_intersect(inside, _ivals_complement(others))
        for th1, th2 in exposed:
            total += 0.5 * (
                R * cx * (sin(th2) - sin(th1))
                - R * cy * (cos(th2) - cos(th1))
                + R * R * (th2 - th1)
            )

    return _clamp01(total, 0.0, tri.area)
