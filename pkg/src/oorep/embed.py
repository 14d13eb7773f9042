"""Plane outside-obstacle drawings built from chord orientations.

Nodes of the construction tree are attached in breadth-first order.  Each new
node hangs off a directed chord ``u -> v`` and its new vertices go into the
cone of the existing triangle at ``v``, close to ``v`` and close to the line
through ``u`` and ``v``.  Placement parameters are dyadic and halved until
every exact check passes, so coordinates stay integers over a power of two.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .drawing import Drawing
from .geometry import GeometryError, chord_is_good, in_region
from .graph import Edge, Graph, biconnected_blocks, build_graph, canon, compute_faces, is_connected
from .orientation import ChordOrientation, greedy_outerplanar, validate_orientation
from .predicates import edges_conflict, new_point_collinear, orient, point_in_triangle
from .recognize import (
    InnerChordalGraph,
    NotInnerChordal,
    RejectReason,
    _chordless_witness,
    _embedding,
    recognize,
    recognize_maximal_outerplanar,
)

log = logging.getLogger(__name__)

MAX_HALVINGS = 80


class EmbeddingError(RuntimeError):
    """Placement did not converge; carries the failing attachment step."""

    def __init__(self, message: str, step: int):
        super().__init__(f"step {step}: {message}")
        self.step = step


def _in_ccw_wedge(c, a, b, x) -> bool:
    """``x`` strictly inside the wedge at ``c`` swept counterclockwise from ``a`` to ``b``."""
    if orient(c, a, b) > 0:
        return orient(c, a, x) > 0 and orient(c, x, b) > 0
    return orient(c, a, x) > 0 or orient(c, x, b) > 0


def _offset(base, *terms):
    """``base`` plus each direction scaled by ``2**e`` (``e=None`` subtracts it once)."""
    x, y = base
    for (dx, dy), e in terms:
        if e is None:
            x, y = x - dx, y - dy
        else:
            x, y = x + (dx << e), y + (dy << e)
    return x, y


@dataclass
class AttachState:
    """Partial drawing of the subgraph of the first ``i`` tree nodes."""

    pts: list  # integer coordinates at scale 2**shift, None while unplaced
    shift: int
    edges: list[Edge]
    succ: dict[int, int]
    pred: dict[int, int]
    inactive_in: dict[int, int]
    owner: dict[Edge, int]

    def scaled(self, sh: int) -> list:
        return [None if p is None else (p[0] << sh, p[1] << sh) for p in self.pts]


class _Embedder:
    def __init__(self, ic: InnerChordalGraph, o: ChordOrientation, check_invariants: bool = False):
        self.ic = ic
        self.tree = ic.tree
        self.o = o.direction
        self.check_invariants = check_invariants
        self.pos = {v: i for i, v in enumerate(ic.outer_cycle)}

    def _third(self, node: int, e: Edge) -> int:
        return self.tree.nodes[node].side_triangle(e)[2]

    def _property_ok(self, st: AttachState, pts: list, x: int) -> bool:
        p, s = st.pred[x], st.succ[x]
        inact = st.inactive_in.get(x, 0)
        if inact == 0:
            return orient(pts[p], pts[x], pts[s]) > 0
        if inact == 1:
            active = [y for y in (p, s) if self.o.get(canon(x, y)) == x]
            if not active:
                return True
            y = active[0]
            z = self._third(st.owner[canon(x, y)], canon(x, y))
            if y == s:
                return orient(pts[p], pts[x], pts[z]) > 0
            return orient(pts[z], pts[x], pts[s]) > 0
        return True

    def _root(self, root: int) -> AttachState:
        nd = self.tree.nodes[root]
        a, b, c = sorted(nd.triangle, key=self.pos.__getitem__)
        n = self.ic.graph.n
        pts: list = [None] * n
        if nd.inner is None:
            pts[a], pts[b], pts[c] = (0, 0), (1, 0), (0, 1)
            shift = 0
        else:
            pts[a], pts[b], pts[c], pts[nd.inner] = (0, 0), (4, 0), (0, 4), (1, 1)
            shift = 2
        st = AttachState(pts, shift, list(nd.edges()), {a: b, b: c, c: a}, {b: a, c: b, a: c}, {}, {})
        for e in nd.edges():
            st.owner[e] = root
        return st

    def run(self, root: int = 0) -> Drawing:
        tree = self.tree
        st = self._root(root)
        order = []
        parent: dict[int, tuple[int, Edge]] = {}
        seen = {root}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, e in tree.neighbours[x]:
                if y not in seen:
                    seen.add(y)
                    parent[y] = (x, e)
                    order.append(y)
                    queue.append(y)
        for step, node in enumerate(order, start=1):
            self._attach(st, node, *parent[node], step)
            if self.check_invariants:
                self._assert_properties(st, step)
        den = 1 << st.shift
        points = tuple((Fraction(x, den), Fraction(y, den)) for x, y in st.pts)
        return Drawing(points, self.ic.graph, self.ic)

    def _assert_properties(self, st: AttachState, step: int) -> None:
        for x in st.succ:
            if not self._property_ok(st, st.pts, x):
                raise EmbeddingError(f"convexity invariant fails at vertex {x}", step)

    def _attach(self, st: AttachState, node: int, par: int, e: Edge, step: int) -> None:
        nd = self.tree.nodes[node]
        v = self.o[e]
        u = e[0] if v == e[1] else e[1]
        a = self._third(par, e)
        (w,) = [x for x in nd.triangle if x not in e]
        m = nd.inner
        st.inactive_in[v] = st.inactive_in.get(v, 0) + 1
        if st.succ[u] == v:
            lo, hi = u, v
        else:
            lo, hi = v, u
        new_edges = [canon(u, w), canon(v, w)]
        if m is not None:
            new_edges += [canon(u, m), canon(v, m), canon(w, m)]
        extra = 2 if m is not None else 0
        k = j = 2
        for _ in range(MAX_HALVINGS):
            sh = k + j + extra
            pts = st.scaled(sh)
            P = st.pts
            du = (P[v][0] - P[u][0], P[v][1] - P[u][1])
            da = (P[v][0] - P[a][0], P[v][1] - P[a][1])
            # the tip hugs the extension of uv first, then that of av
            for d1, d2 in ((du, da), (da, du)):
                cand = {w: _offset(pts[v], (d1, j + extra), (d2, extra))}
                if m is not None:
                    # midpoint of v and the tip, nudged towards u so it is interior
                    cand[m] = _offset(pts[v], (d1, j + 1), (d2, 1), (du, None))
                if self._accept(st, node, pts, u, v, a, w, m, lo, hi, cand, new_edges):
                    st.pts = pts
                    for x, q in cand.items():
                        st.pts[x] = q
                    st.shift += sh
                    st.succ[lo], st.pred[w], st.succ[w], st.pred[hi] = w, lo, hi, w
                    st.edges += new_edges
                    for f in new_edges:
                        st.owner[f] = node
                    return
            k += 1
            j += 1
        raise EmbeddingError(f"placement for node {node} across {e} did not converge", step)

    def _accept(self, st, node, pts, u, v, a, w, m, lo, hi, cand, new_edges) -> bool:
        tri = [pts[v], pts[u], pts[a]]
        if not all(in_region(p, tri, 0) for p in cand.values()):
            return False
        if not _in_ccw_wedge(pts[v], pts[st.pred[v]], pts[st.succ[v]], cand[w]):
            return False
        if m is not None and not point_in_triangle(cand[m], pts[u], pts[v], cand[w]):
            return False
        placed = [p for p in pts if p is not None]
        for x, q in cand.items():
            others = placed + [p for y, p in cand.items() if y != x]
            if new_point_collinear(others, q) is not None:
                return False
        # everything new lies in triangle uvw; skip what its bounding box misses
        corners = (pts[u], pts[v], cand[w])
        x0, x1 = min(c[0] for c in corners), max(c[0] for c in corners)
        y0, y1 = min(c[1] for c in corners), max(c[1] for c in corners)
        for p in placed:
            if x0 <= p[0] <= x1 and y0 <= p[1] <= y1 and point_in_triangle(p, *corners):
                return False
        full = list(pts)
        for x, q in cand.items():
            full[x] = q
        near = []
        for g in st.edges:
            p, q = full[g[0]], full[g[1]]
            if (min(p[0], q[0]) <= x1 and max(p[0], q[0]) >= x0
                    and min(p[1], q[1]) <= y1 and max(p[1], q[1]) >= y0):
                near.append(g)
        for f in new_edges:
            a1, b1 = full[f[0]], full[f[1]]
            for g in near:
                shared = len({f[0], f[1], g[0], g[1]}) < 4
                if edges_conflict(a1, b1, full[g[0]], full[g[1]], shared):
                    return False
        # tentative insertion of w between lo and hi on the outer cycle
        saved = (st.succ[lo], st.pred[hi])
        st.succ[lo], st.pred[hi] = w, w
        st.pred[w], st.succ[w] = lo, hi
        for f in new_edges:
            st.owner[f] = node
        try:
            return all(self._property_ok(st, full, x) for x in (u, v, w))
        finally:
            st.succ[lo], st.pred[hi] = saved
            del st.pred[w], st.succ[w]
            for f in new_edges:
                del st.owner[f]


def embed(ic: InnerChordalGraph, o: ChordOrientation, root: int = 0,
          check_invariants: bool = False) -> Drawing:
    """Exact plane drawing of ``ic`` whose chords are good and induce ``o``."""
    check = validate_orientation(ic, o)
    if not check:
        raise ValueError(f"not an outside-obstacle orientation: {check.reason}")
    return _Embedder(ic, o, check_invariants).run(root)


def derive_orientation(d: Drawing) -> ChordOrientation:
    """Direct every chord towards the endpoint whose cones hold the opposite tips."""
    from .geometry import structure

    ic = structure(d)
    out = {}
    for e in ic.chords:
        c = chord_is_good(d, e)
        if not c.good:
            raise GeometryError(f"chord {e} is not good")
        out[e] = c.toward
    return ChordOrientation(out)


def _block_cycle(g: Graph, block: frozenset[int]) -> tuple[int, ...]:
    """Outer cycle of a block, which must be a single edge or maximal outerplanar."""
    if len(block) == 2:
        return tuple(sorted(block))
    sub = build_graph(g.n, [e for e in g.edges if e[0] in block and e[1] in block])
    try:
        return recognize_maximal_outerplanar(sub).outer_cycle
    except NotInnerChordal:
        witness = _chordless_witness(sub)
        if witness is not None:
            raise NotInnerChordal(RejectReason("chordless_cycle", witness,
                                               "outerplanar graph with a chordless cycle")) from None
        raise NotInnerChordal(RejectReason("not_outerplanar", tuple(sorted(block)),
                                           "block is not outerplanar")) from None


def _hamiltonian_order(g: Graph) -> list[int]:
    """Visit order making ``g`` plus the closing cycle outerplanar."""
    blocks = [b for b in biconnected_blocks(g) if len(b) >= 2]
    cycles = [_block_cycle(g, b) for b in blocks]
    at: dict[int, list[int]] = {}
    for i, b in enumerate(blocks):
        for v in b:
            at.setdefault(v, []).append(i)
    used: set[int] = set()

    def spliced(x: int):
        # the unvisited blocks through x, each walked around its cycle from x
        for bi in sorted(at.get(x, ())):
            if bi not in used:
                used.add(bi)
                cyc = cycles[bi]
                k = cyc.index(x)
                yield from cyc[k + 1:] + cyc[:k]

    order = [0]
    stack = [spliced(0)]
    while stack:
        y = next(stack[-1], None)
        if y is None:
            stack.pop()
        else:
            order.append(y)
            stack.append(spliced(y))
    return order


def represent_outerplanar(g: Graph) -> Drawing:
    """Plane outside-obstacle drawing of a connected chordal outerplanar graph.

    The graph is closed up by a Hamiltonian cycle and fan triangulated into a
    maximal outerplanar graph, which is embedded; the drawing keeps those
    coordinates and only the edges of ``g``.
    """
    if not is_connected(g):
        raise NotInnerChordal(RejectReason("disconnected", (), "graph is disconnected"))
    if g.n <= 2:
        pts = [(Fraction(0), Fraction(0)), (Fraction(1), Fraction(0))][:g.n]
        return Drawing(tuple(pts), g)
    order = _hamiltonian_order(g)
    ring = {canon(order[i], order[(i + 1) % len(order)]) for i in range(len(order))}
    closed = build_graph(g.n, g.edges | ring)
    extra = set()
    for face in compute_faces(_embedding(closed, tuple(order), {})):
        if face.is_outer or len(face) == 3:
            continue
        vs = face.vertices
        k = vs.index(min(vs))
        vs = vs[k:] + vs[:k]
        extra.update(canon(vs[0], x) for x in vs[2:-1])
    h = build_graph(g.n, closed.edges | extra)
    ic = recognize(h)
    d = embed(ic, greedy_outerplanar(ic))
    return Drawing(d.points, g)
