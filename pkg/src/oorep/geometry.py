"""Regions, good chords and the plane outside-obstacle verifier.

All verdicts are computed with exact integer arithmetic on the drawing's
coordinates scaled to a common denominator.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .drawing import Drawing, format_rational
from .graph import Edge, GraphError, canon, is_biconnected, is_connected
from .predicates import collinear_witness, edges_conflict, orient, point_in_polygon, segment_parameter, sign
from .recognize import InnerChordalGraph, NotInnerChordal, RejectReason, recognize


class GeometryError(ValueError):
    pass


@dataclass(frozen=True)
class Region:
    """Open cone: points with ``a*x + b*y + c > 0`` for both half-planes."""

    apex: tuple
    halfplanes: tuple[tuple, tuple]

    def contains(self, p: Sequence) -> bool:
        return all(a * p[0] + b * p[1] + c > 0 for a, b, c in self.halfplanes)


def _halfplane_away(p, q, inside) -> tuple:
    """Half-plane bounded by line ``pq`` on the side not containing ``inside``."""
    a = q[1] - p[1]
    b = p[0] - q[0]
    c = -(a * p[0] + b * p[1])
    s = a * inside[0] + b * inside[1] + c
    return (a, b, c) if s < 0 else (-a, -b, -c)


def region_of(D: Sequence[Sequence], corner: int | Sequence) -> Region:
    """Cone at a corner of triangle ``D`` beyond both sides meeting there.

    ``corner`` is an index into ``D`` or one of its points.
    """
    pts = [tuple(Fraction(c) for c in p) for p in D]
    if orient(*pts) == 0:
        raise GeometryError("degenerate triangle")
    k = corner if isinstance(corner, int) else pts.index(tuple(Fraction(c) for c in corner))
    u = pts[k]
    v, w = pts[(k + 1) % 3], pts[(k + 2) % 3]
    return Region(u, (_halfplane_away(u, v, w), _halfplane_away(u, w, v)))


def in_region(p, tri: Sequence, corner: int) -> bool:
    """``p`` in the cone of ``tri`` at ``tri[corner]`` (integer fast path)."""
    u = tri[corner]
    v, w = tri[(corner + 1) % 3], tri[(corner + 2) % 3]
    return (sign(orient(u, v, p)) * sign(orient(u, v, w)) < 0
            and sign(orient(u, w, p)) * sign(orient(u, w, v)) < 0)


@dataclass(frozen=True)
class ChordCheck:
    chord: Edge
    good: bool
    toward: int | None
    mirrored_ok: bool = True

    def to_json(self) -> dict:
        return {"chord": list(self.chord), "good": self.good, "toward": self.toward,
                "mirrored_ok": self.mirrored_ok}


def structure(d: Drawing) -> InnerChordalGraph:
    """Inner-chordal structure whose inner vertices are those off the drawn outer face."""
    if d.ic is not None:
        return d.ic
    cached = d.__dict__.get("_structure")
    if cached is None:
        try:
            outer = set(d.embedding.outer_face.vertices)
            cached = recognize(d.graph, inner=set(range(d.graph.n)) - outer)
        except GraphError as exc:
            cached = NotInnerChordal(RejectReason("not_planar_inner_chordal", (), str(exc)))
        except NotInnerChordal as exc:
            cached = exc
        d.__dict__["_structure"] = cached
    if isinstance(cached, NotInnerChordal):
        raise cached
    return cached


def chord_is_good(d: Drawing, chord: Sequence[int]) -> ChordCheck:
    """Test whether the far vertices of one side lie in a single cone of the other."""
    ic = structure(d)
    e = canon(*chord)
    nodes = ic.tree.nodes_of_chord.get(e)
    if nodes is None:
        raise GeometryError(f"{e} is not a chord")
    P = d.int_points
    s, t = (ic.tree.nodes[i] for i in nodes)
    D, Dp = s.side_triangle(e), t.side_triangle(e)
    W, Wp = s.tips(e), t.tips(e)
    triD = [P[x] for x in D]
    triDp = [P[x] for x in Dp]
    for k, x in enumerate(e):
        if all(in_region(P[w], triD, k) for w in Wp):
            mirrored = all(in_region(P[w], triDp, k) for w in W)
            return ChordCheck(e, True, x, mirrored)
    return ChordCheck(e, False, None, not any(all(in_region(P[w], triDp, k) for w in W) for k in range(2)))


def planarity_witness(d: Drawing) -> tuple | None:
    """A pair of conflicting edges (or coincident vertices), else ``None``."""
    P = d.int_points
    if len(set(P)) != len(P):
        seen = {}
        for v, p in enumerate(P):
            if p in seen:
                return ("coincident", seen[p], v)
            seen[p] = v
    edges = d.graph.sorted_edges()
    boxes = []
    for u, v in edges:
        a, b = P[u], P[v]
        boxes.append((min(a[0], b[0]), max(a[0], b[0]), min(a[1], b[1]), max(a[1], b[1])))
    order = sorted(range(len(edges)), key=lambda i: boxes[i][0])
    for ii, i in enumerate(order):
        bi = boxes[i]
        u, v = edges[i]
        for j in order[ii + 1:]:
            bj = boxes[j]
            if bj[0] > bi[1]:
                break
            if bj[3] < bi[2] or bj[2] > bi[3]:
                continue
            x, y = edges[j]
            shared = len({u, v, x, y}) < 4
            if edges_conflict(P[u], P[v], P[x], P[y], shared):
                return ("crossing", edges[i], edges[j])
    return None


def general_position_witness(d: Drawing) -> tuple[int, int, int] | None:
    return collinear_witness(d.int_points)


def _bounded_faces(d: Drawing) -> list[tuple[int, ...]]:
    return [f.vertices for f in d.embedding.faces if not f.is_outer]


def segment_intersects_outer(d: Drawing, p: int, q: int) -> bool:
    """Whether an open piece of segment ``pq`` lies in the open outer face.

    The bounded faces are taken as (possibly degenerate) polygons; the
    parameter intervals of ``pq`` they cover are merged and checked for a gap.
    """
    if p == q:
        raise GeometryError("segment endpoints must differ")
    if planarity_witness(d) is not None:
        raise GeometryError("drawing is not plane")
    P = d.int_points
    a, b = P[p], P[q]
    covered: list[tuple[Fraction, Fraction]] = []
    for face in _bounded_faces(d):
        poly = [P[v] for v in face]
        ts = {Fraction(0), Fraction(1)}
        k = len(poly)
        for i in range(k):
            t = segment_parameter(a, b, poly[i], poly[(i + 1) % k])
            if t is not None:
                ts.add(t)
        ts = sorted(ts)
        for lo, hi in zip(ts, ts[1:]):
            mid = lo + (hi - lo) / 2
            den = mid.denominator
            m2 = (a[0] * den + (b[0] - a[0]) * mid.numerator, a[1] * den + (b[1] - a[1]) * mid.numerator)
            scaled = [(x * den, y * den) for x, y in poly]
            if point_in_polygon(m2, scaled) != 0:
                covered.append((lo, hi))
    covered.sort()
    reach = Fraction(0)
    for lo, hi in covered:
        if lo > reach:
            return True
        reach = max(reach, hi)
    return reach < 1


class _TriangleWalker:
    """Walks a segment through a triangulated drawing (all bounded faces triangles)."""

    def __init__(self, d: Drawing, faces: list[tuple[int, ...]]):
        self.P = d.int_points
        self.third: dict[tuple[int, int], int] = {}
        self.at: dict[int, list[tuple[int, int]]] = defaultdict(list)
        for a, b, c in faces:
            # faces are counterclockwise: (a, b, c) has its interior on the left of each dart
            for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                self.third[(x, y)] = z
                self.at[x].append((y, z))

    def exits(self, p: int, q: int) -> bool:
        P = self.P
        pp, pq = P[p], P[q]
        start = None
        for x, y in self.at[p]:
            if orient(pp, P[x], pq) > 0 and orient(pp, pq, P[y]) > 0:
                start = (x, y)
                break
        if start is None:
            return True
        x, y = start
        # the segment leaves triangle (p, x, y) through edge xy; cross it
        while True:
            z = self.third.get((y, x))
            if z is None:
                return True
            if z == q:
                return False
            if orient(pp, pq, P[z]) > 0:
                y = z
            else:
                x = z


@dataclass
class VerificationReport:
    planar: bool
    general_position: bool
    chords: list[ChordCheck] = field(default_factory=list)
    non_edges: list[tuple[int, int, bool]] = field(default_factory=list)
    local_verdict: bool | None = None
    exhaustive_verdict: bool | None = None
    structure_ok: bool = True
    criteria_agree: bool | None = None
    problems: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        if not (self.planar and self.general_position and self.exhaustive_verdict):
            return False
        return self.local_verdict is not False

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "planar": self.planar,
            "general_position": self.general_position,
            "local_verdict": self.local_verdict,
            "exhaustive_verdict": self.exhaustive_verdict,
            "criteria_agree": self.criteria_agree,
            "structure_ok": self.structure_ok,
            "chords": [c.to_json() for c in self.chords],
            "non_edges": [{"pair": [p, q], "intersects_outer": ok} for p, q, ok in self.non_edges],
            "problems": list(self.problems),
        }


def is_plane_oor(d: Drawing) -> VerificationReport:
    """Check a drawing by the local good-chord test and by every non-edge."""
    g = d.graph
    pw = planarity_witness(d)
    gw = general_position_witness(d)
    report = VerificationReport(planar=pw is None, general_position=gw is None)
    if pw is not None:
        report.problems.append(f"not plane: {pw}")
    if gw is not None:
        report.problems.append(f"collinear or coincident vertices {gw}")
    if not is_connected(g):
        report.problems.append("graph is disconnected")
        report.exhaustive_verdict = False
        return report

    if is_biconnected(g):
        try:
            ic = structure(d)
        except NotInnerChordal as exc:
            report.structure_ok = False
            report.local_verdict = False
            report.problems.append(f"drawn embedding is not inner-chordal: {exc}")
        else:
            report.chords = [chord_is_good(d, e) for e in ic.chords]
            report.local_verdict = all(c.good for c in report.chords)
            for c in report.chords:
                if not c.mirrored_ok:
                    report.problems.append(f"internal inconsistency: mirrored containment fails at {c.chord}")

    if not report.planar:
        report.exhaustive_verdict = False
        return report
    faces = _bounded_faces(d)
    walker = _TriangleWalker(d, faces) if all(len(f) == 3 for f in faces) else None
    for p, q in g.non_edges():
        ok = walker.exits(p, q) if walker is not None else segment_intersects_outer(d, p, q)
        report.non_edges.append((p, q, ok))
    report.exhaustive_verdict = all(ok for _, _, ok in report.non_edges)
    if report.local_verdict is not None and report.structure_ok:
        report.criteria_agree = report.local_verdict == report.exhaustive_verdict
        if not report.criteria_agree and report.general_position:
            report.problems.append("local and exhaustive criteria disagree")
    return report


def format_point(p) -> list[str]:
    return [format_rational(p[0]), format_rational(p[1])]
