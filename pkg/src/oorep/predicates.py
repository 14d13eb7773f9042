"""Exact orientation and intersection predicates.

Everything here works on any exact number type (``int`` or ``Fraction``);
the hot paths convert a drawing to integer coordinates first.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Point = tuple  # (x, y) of ints or Fractions


def orient(a: Point, b: Point, c: Point):
    """Twice the signed area of ``abc``; positive for a left turn."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def sign(x) -> int:
    return (x > 0) - (x < 0)


def to_integer_points(points: Sequence[tuple[Fraction, Fraction]]) -> tuple[list[tuple[int, int]], int]:
    """Scale rational points by the lcm of their denominators."""
    den = 1
    for x, y in points:
        den = lcm(den, Fraction(x).denominator, Fraction(y).denominator)
    out = [(int(Fraction(x) * den), int(Fraction(y) * den)) for x, y in points]
    return out, den


def direction_key(dx: int, dy: int) -> tuple[int, int]:
    """Canonical primitive direction of the line through (0,0) and (dx, dy)."""
    g = gcd(dx, dy)
    dx, dy = dx // g, dy // g
    if dx < 0 or (dx == 0 and dy < 0):
        dx, dy = -dx, -dy
    return dx, dy


def collinear_witness(pts: Sequence[tuple[int, int]]) -> tuple[int, int, int] | None:
    """Indices of some collinear triple (or a repeated point), else ``None``."""
    n = len(pts)
    for i in range(n):
        px, py = pts[i]
        seen: dict[tuple[int, int], int] = {}
        for j in range(n):
            if j == i:
                continue
            dx, dy = pts[j][0] - px, pts[j][1] - py
            if dx == 0 and dy == 0:
                return (i, j, j)
            key = direction_key(dx, dy)
            if key in seen:
                return (i, seen[key], j)
            seen[key] = j
    return None


def new_point_collinear(pts: Sequence[tuple[int, int]], q: tuple[int, int]) -> tuple[int, int] | None:
    """Two indices of ``pts`` collinear with ``q`` (or one equal to it)."""
    seen: dict[tuple[int, int], int] = {}
    for j, (x, y) in enumerate(pts):
        dx, dy = x - q[0], y - q[1]
        if dx == 0 and dy == 0:
            return (j, j)
        key = direction_key(dx, dy)
        if key in seen:
            return (seen[key], j)
        seen[key] = j
    return None


def _boxes_overlap(a, b, c, d) -> bool:
    return (max(a[0], b[0]) >= min(c[0], d[0]) and max(c[0], d[0]) >= min(a[0], b[0])
            and max(a[1], b[1]) >= min(c[1], d[1]) and max(c[1], d[1]) >= min(a[1], b[1]))


def segments_intersect(a, b, c, d) -> bool:
    """Closed segments ``ab`` and ``cd`` share a point."""
    if not _boxes_overlap(a, b, c, d):
        return False
    o1, o2 = sign(orient(a, b, c)), sign(orient(a, b, d))
    o3, o4 = sign(orient(c, d, a)), sign(orient(c, d, b))
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return ((o1 == 0 and on_segment(a, b, c)) or (o2 == 0 and on_segment(a, b, d))
            or (o3 == 0 and on_segment(c, d, a)) or (o4 == 0 and on_segment(c, d, b)))


def on_segment(a, b, p) -> bool:
    """``p`` (already known collinear with ``ab``) lies on the closed segment."""
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def edges_conflict(a, b, c, d, shared: bool) -> bool:
    """Two drawn edges meet somewhere other than a common endpoint."""
    if not shared:
        return segments_intersect(a, b, c, d)
    # with a shared endpoint the only conflict is overlap along a common line
    if a == c or a == d:
        o, p, q = a, b, (d if a == c else c)
    else:
        o, p, q = b, a, (d if b == c else c)
    if orient(o, p, q) != 0:
        return False
    return (p[0] - o[0]) * (q[0] - o[0]) + (p[1] - o[1]) * (q[1] - o[1]) > 0


def point_in_triangle(p, a, b, c) -> bool:
    """Strictly inside a triangle of either orientation."""
    s1, s2, s3 = sign(orient(a, b, p)), sign(orient(b, c, p)), sign(orient(c, a, p))
    return s1 == s2 == s3 != 0


def point_in_polygon(p, poly: Sequence) -> int:
    """Winding number of ``poly`` around ``p``; ``p`` must not lie on the boundary."""
    wn = 0
    n = len(poly)
    for i in range(n):
        a, b = poly[i], poly[(i + 1) % n]
        if a[1] <= p[1]:
            if b[1] > p[1] and orient(a, b, p) > 0:
                wn += 1
        elif b[1] <= p[1] and orient(a, b, p) < 0:
            wn -= 1
    return wn


def point_on_polygon_boundary(p, poly: Sequence) -> bool:
    n = len(poly)
    return any(orient(poly[i], poly[(i + 1) % n], p) == 0 and on_segment(poly[i], poly[(i + 1) % n], p)
               for i in range(n))


def segment_parameter(p, q, a, b) -> Fraction | None:
    """Parameter ``t`` in [0, 1] where ``p + t (q - p)`` properly crosses line ``ab``
    within segment ``ab``; ``None`` if they do not meet at a single point."""
    d1 = orient(a, b, p)
    d2 = orient(a, b, q)
    if d1 == d2:
        return None
    if (d1 > 0 and d2 > 0) or (d1 < 0 and d2 < 0):
        return None
    e1 = orient(p, q, a)
    e2 = orient(p, q, b)
    if (e1 > 0 and e2 > 0) or (e1 < 0 and e2 < 0):
        return None
    if e1 == 0 and e2 == 0:
        return None
    return Fraction(d1, d1 - d2) if isinstance(d1, int) else Fraction(d1) / (d1 - d2)


def angular_sort(center, nbrs: Sequence[tuple[int, tuple]]) -> list[int]:
    """Neighbour ids sorted counterclockwise by direction, starting from angle 0."""
    from functools import cmp_to_key

    cx, cy = center

    def half(v):
        dx, dy = v[0] - cx, v[1] - cy
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def cmp(a, b):
        ha, hb = half(a[1]), half(b[1])
        if ha != hb:
            return ha - hb
        o = orient(center, a[1], b[1])
        return -1 if o > 0 else (1 if o < 0 else 0)

    return [i for i, _ in sorted(nbrs, key=cmp_to_key(cmp))]
