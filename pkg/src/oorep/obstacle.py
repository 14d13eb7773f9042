"""A single obstacle surrounding a plane outside-obstacle drawing, and visibility graphs.

The obstacle is the region between a bounding polygon and a ring that hugs
the outer boundary of the drawing at distance roughly ``2**-k``.  A narrow
foot below the lowest ring corner cuts the annulus open so the obstacle is
one simple polygon.  The ring distance shrinks until the visibility graph of
the points equals the drawn graph; that equality is checked exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .drawing import Drawing, format_rational, parse_rational
from .geometry import GeometryError, is_plane_oor
from .graph import Graph, build_graph
from .predicates import (
    collinear_witness,
    edges_conflict,
    new_point_collinear,
    orient,
    point_in_polygon,
    segments_intersect,
    to_integer_points,
)

PERTURB = (0, 1, -1, 2, -2, 3, -3, 5, -5, 7, -7)
WEIGHTS = ((1, 1), (2, 1), (1, 2), (3, 2), (2, 3), (3, 1), (1, 3), (5, 3), (3, 5), (4, 3), (3, 4))
MAX_ROUNDS = 24


class ObstacleError(RuntimeError):
    """The construction could not be verified; ``pair`` is an offending vertex pair."""

    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair


@dataclass(frozen=True)
class SimplePolygon:
    vertices: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple((Fraction(x), Fraction(y)) for x, y in self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def is_simple(self) -> bool:
        return _simple(to_integer_points(self.vertices)[0])

    def is_ccw(self) -> bool:
        P = self.vertices
        area = sum(P[i][0] * P[(i + 1) % len(P)][1] - P[(i + 1) % len(P)][0] * P[i][1] for i in range(len(P)))
        return area > 0

    def to_json(self) -> dict:
        return {"vertices": [[format_rational(x), format_rational(y)] for x, y in self.vertices]}

    @classmethod
    def from_json(cls, data: dict) -> "SimplePolygon":
        return cls(tuple((parse_rational(x), parse_rational(y)) for x, y in data["vertices"]))


def _simple(P: Sequence) -> bool:
    m = len(P)
    if m < 3 or len(set(P)) != m:
        return False
    for i in range(m):
        a, b = P[i], P[(i + 1) % m]
        for j in range(i + 1, m):
            c, d = P[j], P[(j + 1) % m]
            adjacent = j == i + 1 or (i == 0 and j == m - 1)
            if edges_conflict(a, b, c, d, adjacent):
                return False
    return True


def _blocked(p, q, poly: Sequence) -> bool:
    """Closed segment ``pq`` meets the closed polygon region (endpoints outside it)."""
    m = len(poly)
    for i in range(m):
        if segments_intersect(p, q, poly[i], poly[(i + 1) % m]):
            return True
    # no boundary contact: either the segment is inside or fully outside
    mid = (p[0] + q[0], p[1] + q[1])
    return point_in_polygon(mid, [(2 * x, 2 * y) for x, y in poly]) != 0


def visibility_graph(points: Sequence, obstacle: SimplePolygon | None = None) -> Graph:
    """Graph joining every two points whose segment misses the closed obstacle."""
    corners = list(obstacle.vertices) if obstacle is not None else []
    allp, _ = to_integer_points(list(points) + corners)
    n = len(points)
    w = collinear_witness(allp)
    if w is not None:
        raise GeometryError(f"points/obstacle corners {w} violate general position")
    P, poly = allp[:n], allp[n:]
    edges = [(p, q) for p in range(n) for q in range(p + 1, n)
             if not poly or not _blocked(P[p], P[q], poly)]
    return build_graph(n, edges)


def _shift(p, e: int) -> tuple[int, int]:
    return p[0] << e, p[1] << e


def _ring(d: Drawing, k: int) -> tuple[list[tuple[int, int]], int, int] | None:
    """Offset corners of the outer walk at scale ``2**k`` (clockwise, like the walk)."""
    P = d.int_points
    walk = [dart[0] for dart in d.embedding.outer_face.boundary]
    m = len(walk)
    L = max(abs(P[a][0] - P[b][0]) + abs(P[a][1] - P[b][1]) for a, b in d.graph.edges)
    B = L.bit_length()
    q = 8

    def unit(v, x):
        dx, dy = P[x][0] - P[v][0], P[x][1] - P[v][1]
        s = B - (abs(dx) + abs(dy)).bit_length()
        return dx << s, dy << s

    sh = B + q + 1 + k
    existing = [_shift(p, sh) for p in P]
    ring = []

    def place(base, combos) -> bool:
        for bis in combos:
            pt = (base[0] + (bis[0] << q), base[1] + (bis[1] << q))
            if new_point_collinear(existing, pt) is None:
                existing.append(pt)
                ring.append(pt)
                return True
        return False

    for i in range(m):
        a, v, b = walk[i - 1], walk[i], walk[(i + 1) % m]
        base = _shift(P[v], sh)
        r1 = unit(v, a)
        if a == b:
            # a leaf: cap it with one corner on each side of its edge,
            # the arriving side (left of a -> v) first
            left = (r1[1], -r1[0])
            for side in (1, -1):
                combos = [(-r1[0] * al + side * left[0] * be, -r1[1] * al + side * left[1] * be)
                          for al, be in WEIGHTS]
                if not place(base, combos):
                    return None
            continue
        r2 = unit(v, b)
        t = orient(P[a], P[v], P[b])
        if t == 0:
            raise GeometryError(f"collinear outer corner at vertex {v}")
        sgn = 1 if t > 0 else -1
        # positive combinations stay strictly inside the outer angle
        combos = [(sgn * (al * r1[0] + be * r2[0]), sgn * (al * r1[1] + be * r2[1])) for al, be in WEIGHTS]
        if not place(base, combos):
            return None
    return ring, sh, B + q


def _generic(existing: list, pt, step: int, xstep: int | None = None):
    """First nearby lattice perturbation of ``pt`` in general position; it joins ``existing``."""
    xstep = step if xstep is None else xstep
    for c in PERTURB:
        for c2 in PERTURB:
            cand = (pt[0] + c * xstep, pt[1] + c2 * step)
            if new_point_collinear(existing, cand) is None:
                existing.append(cand)
                return cand
    return None


def _assemble(d: Drawing, k: int) -> tuple[list[tuple[int, int]], int] | None:
    got = _ring(d, k)
    if got is None:
        return None
    ring_cw, sh, reach = got
    R = ring_cw[::-1]
    i = min(range(len(R)), key=lambda j: (R[j][1], R[j][0]))
    low, prev, nxt = R[i], R[i - 1], R[(i + 1) % len(R)]
    existing = [_shift(p, sh) for p in d.int_points] + [r for j, r in enumerate(R) if j != i]
    P = [_shift(p, sh) for p in d.int_points]
    segs = [(P[a], P[b]) for a, b in d.graph.edges]
    n = len(R)
    segs += [(R[j], R[(j + 1) % n]) for j in range(n) if j != i and (j + 1) % n != i]
    # shrink the foot until its edges clear the drawing and the rest of the ring
    w = 1 << reach
    while True:
        w >>= 1
        if w == 0:
            return None
        trial = list(existing)
        p1 = _generic(trial, (low[0] - w, low[1] - w), max(w >> 3, 1))
        p2 = _generic(trial, (low[0] + w, low[1] - w), max(w >> 3, 1))
        if p1 is None or p2 is None:
            continue
        foot = ((prev, p1), (p1, p2), (p2, nxt))
        if not any(edges_conflict(a, b, c, e, len({a, b, c, e}) < 4) for a, b in foot for c, e in segs):
            existing = trial
            break
    xs = [p[0] for p in existing]
    ys = [p[1] for p in existing]
    M = max(max(xs) - min(xs), max(ys) - min(ys), 16)
    x0, x1, y0, y1 = min(xs) - M, max(xs) + M, min(ys) - M, max(ys) + M
    step = max(M >> 6, 1)
    corners = []
    for pt in ((x1, y0), (x1 + M // 7, y1), (x0, y1 + M // 5), (x0 - M // 9, y0 + M // 11)):
        c = _generic(existing, pt, step)
        if c is None:
            return None
        corners.append(c)
    br, tr, tl, bl = corners
    # the channel walls drop almost vertically from the foot
    q2 = _generic(existing, (p2[0] + (w >> 2), y0 - M // 3), step, max(w >> 5, 1))
    q1 = _generic(existing, (p1[0] - (w >> 2), y0 - M // 2), step, max(w >> 5, 1))
    if q1 is None or q2 is None:
        return None
    around = [R[(i - 1 - j) % n] for j in range(n - 1)]  # clockwise from prev to nxt
    return [q2, br, tr, tl, bl, q1, p1] + around + [p2], sh


def build_obstacle(d: Drawing, max_rounds: int = MAX_ROUNDS) -> SimplePolygon:
    """One simple polygon whose visibility graph on the drawing's points is the drawn graph."""
    report = is_plane_oor(d)
    if not (report.planar and report.general_position and report.exhaustive_verdict):
        raise ObstacleError("drawing is not a plane outside-obstacle representation")
    den = to_integer_points(d.points)[1]
    k, step = 0, 1
    last = None
    for _ in range(max_rounds):
        got = _assemble(d, k)
        if got is not None:
            poly, sh = got
            scale = den << sh
            cand = SimplePolygon(tuple((Fraction(x, scale), Fraction(y, scale)) for x, y in poly))
            if _simple(poly):
                try:
                    vis = visibility_graph(d.points, cand)
                except GeometryError:
                    vis = None
                if vis is not None:
                    if vis.edges == d.graph.edges:
                        return cand
                    diff = sorted(vis.edges ^ d.graph.edges)
                    last = diff[0]
        k += step
        step = min(2 * step, 64)
    raise ObstacleError(f"obstacle did not verify after {max_rounds} rounds", last)
