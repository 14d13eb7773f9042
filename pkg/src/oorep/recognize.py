"""Recognition of biconnected inner-chordal plane graphs and their construction trees.

A biconnected inner-chordal plane graph is a maximal outerplanar core with
some triangles "filled" by a degree-3 inner vertex.  Recognition peels the
inner vertices, recognises the core by ear removal and rebuilds the unique
embedding from the ear order.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Literal

import networkx as nx

from .graph import (
    Edge,
    EmbeddedGraph,
    Graph,
    articulation_points,
    build_graph,
    canon,
    is_connected,
)

RejectKind = Literal[
    "not_biconnected",
    "not_planar_inner_chordal",
    "inner_degree_violation",
    "chordless_cycle",
    "not_maximal_outerplanar_core",
    "not_outerplanar",
    "disconnected",
    "no_orientation",
]

Triangle = tuple[int, int, int]


@dataclass(frozen=True)
class RejectReason:
    kind: RejectKind
    witness: tuple
    message: str = ""

    def to_json(self) -> dict:
        return {"kind": self.kind, "witness": list(self.witness), "message": self.message}


class NotInnerChordal(ValueError):
    """Raised when a graph is not a biconnected inner-chordal plane graph."""

    def __init__(self, reason: RejectReason):
        super().__init__(f"{reason.kind}: {reason.message}")
        self.reason = reason


def _reject(kind: RejectKind, witness: Iterable, message: str = "") -> NotInnerChordal:
    return NotInnerChordal(RejectReason(kind, tuple(witness), message))


@dataclass(frozen=True)
class TreeNode:
    kind: Literal["K3", "K4"]
    triangle: Triangle
    inner: int | None = None

    @property
    def vertices(self) -> tuple[int, ...]:
        if self.inner is None:
            return self.triangle
        return self.triangle + (self.inner,)

    def edges(self) -> list[Edge]:
        vs = self.vertices
        return [canon(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]]

    def side_triangle(self, chord: Edge) -> Triangle:
        """The face of this node incident to the outer-triangle edge ``chord``."""
        u, v = chord
        if self.inner is not None:
            return (u, v, self.inner)
        (w,) = [x for x in self.triangle if x != u and x != v]
        return (u, v, w)

    def tips(self, chord: Edge) -> tuple[int, ...]:
        return tuple(x for x in self.vertices if x not in chord)


@dataclass(frozen=True)
class ConstructionTree:
    nodes: tuple[TreeNode, ...]
    tree_edges: tuple[tuple[int, int, Edge], ...]
    source: "InnerChordalGraph | None" = field(default=None, compare=False, repr=False)

    @cached_property
    def neighbours(self) -> tuple[tuple[tuple[int, Edge], ...], ...]:
        nb: list[list[tuple[int, Edge]]] = [[] for _ in self.nodes]
        for i, j, e in self.tree_edges:
            nb[i].append((j, e))
            nb[j].append((i, e))
        return tuple(tuple(sorted(x)) for x in nb)

    @cached_property
    def nodes_of_chord(self) -> dict[Edge, tuple[int, int]]:
        return {e: (i, j) for i, j, e in self.tree_edges}

    @property
    def chords(self) -> list[Edge]:
        return sorted(e for _, _, e in self.tree_edges)

    def degree(self, i: int) -> int:
        return len(self.neighbours[i])

    def kinds(self) -> list[str]:
        return sorted(nd.kind for nd in self.nodes)

    def to_json(self) -> dict:
        nodes = []
        for nd in self.nodes:
            item: dict = {"kind": nd.kind, "vertices": list(nd.vertices)}
            if nd.inner is not None:
                item["inner"] = nd.inner
            nodes.append(item)
        return {"nodes": nodes,
                "tree_edges": [[i, j, list(e)] for i, j, e in self.tree_edges]}

    @classmethod
    def from_json(cls, data: dict) -> "ConstructionTree":
        nodes = []
        for item in data["nodes"]:
            inner = item.get("inner")
            tri = tuple(sorted(v for v in item["vertices"] if v != inner))
            nodes.append(TreeNode(item["kind"], tri, inner))
        edges = tuple((int(i), int(j), canon(*e)) for i, j, e in data["tree_edges"])
        return cls(tuple(nodes), edges)


def merge_tree(t: ConstructionTree, n: int | None = None) -> Graph:
    """Glue the cliques of ``t`` along their shared chords."""
    edges: set[Edge] = set()
    top = -1
    for nd in t.nodes:
        edges.update(nd.edges())
        top = max(top, *nd.vertices)
    return build_graph(top + 1 if n is None else n, sorted(edges))


@dataclass(frozen=True)
class InnerChordalGraph:
    embedded: EmbeddedGraph
    inner_vertices: frozenset[int]
    outer_cycle: tuple[int, ...]
    chords: tuple[Edge, ...]
    core_triangles: tuple[Triangle, ...]
    marked: dict = field(compare=False, repr=False)

    @property
    def graph(self) -> Graph:
        return self.embedded.graph

    @cached_property
    def tree(self) -> ConstructionTree:
        return build_construction_tree(self)

    @cached_property
    def inner_faces(self) -> frozenset[frozenset[int]]:
        """Vertex sets of the bounded faces, read off the rotation system."""
        return frozenset(frozenset(f.vertices) for f in self.embedded.faces if not f.is_outer)


@dataclass(frozen=True)
class MaximalOuterplanar:
    outer_cycle: tuple[int, ...]
    triangles: tuple[Triangle, ...]
    dual_edges: tuple[tuple[int, int, Edge], ...]
    ears: tuple[tuple[int, int, int], ...]


def _active_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.adj[v]]


def recognize_maximal_outerplanar(g: Graph) -> MaximalOuterplanar:
    """Recognise a maximal outerplanar graph by ear removal.

    Isolated vertices are ignored, so a peeled core can be passed directly.
    Returns the outer Hamiltonian cycle (smallest vertex first), the
    triangles (sorted vertex triples) and the weak dual tree.
    """
    verts = _active_vertices(g)
    n = len(verts)
    m = len(g.edges)
    if n < 3:
        raise _reject("not_maximal_outerplanar_core", verts, "fewer than three vertices")
    if m != 2 * n - 3:
        raise _reject("not_maximal_outerplanar_core", (m, 2 * n - 3),
                      f"{m} edges, a maximal outerplanar graph on {n} vertices has {2 * n - 3}")
    nbr = {v: set(g.adj[v]) for v in verts}
    queue = deque(sorted(v for v in verts if len(nbr[v]) == 2))
    ears: list[tuple[int, int, int]] = []
    tri_count: dict[Edge, int] = defaultdict(int)
    remaining = n
    while remaining > 3:
        if not queue:
            raise _reject("not_maximal_outerplanar_core", sorted(nbr),
                          "ear removal stalls")
        v = queue.popleft()
        if v not in nbr or len(nbr[v]) != 2:
            continue
        a, b = sorted(nbr[v])
        if b not in nbr[a]:
            raise _reject("not_maximal_outerplanar_core", (a, v, b),
                          f"neighbours {a}, {b} of degree-2 vertex {v} are not adjacent")
        for e in (canon(a, b), canon(a, v), canon(b, v)):
            tri_count[e] += 1
        ears.append((v, a, b))
        del nbr[v]
        for x in (a, b):
            nbr[x].discard(v)
            if len(nbr[x]) == 2:
                queue.append(x)
        remaining -= 1
    x, y, z = sorted(nbr)
    if not (y in nbr[x] and z in nbr[x] and z in nbr[y]):
        raise _reject("not_maximal_outerplanar_core", (x, y, z), "final three vertices are no triangle")
    for e in (canon(x, y), canon(x, z), canon(y, z)):
        tri_count[e] += 1
    for e, c in tri_count.items():
        if c > 2:
            raise _reject("not_maximal_outerplanar_core", e, f"edge {e} lies in {c} triangles")

    succ = {x: y, y: z, z: x}
    pred = {y: x, z: y, x: z}
    for v, a, b in reversed(ears):
        if succ[a] == b:
            lo, hi = a, b
        elif succ[b] == a:
            lo, hi = b, a
        else:
            raise _reject("not_maximal_outerplanar_core", (a, b), f"edge {a}-{b} is not on the outer cycle")
        succ[lo], pred[v], succ[v], pred[hi] = v, lo, hi, v
    start = min(succ)
    if pred[start] < succ[start]:
        succ, pred = pred, succ
    cycle = [start]
    while len(cycle) < n:
        cycle.append(succ[cycle[-1]])

    triangles = sorted({tuple(sorted(t)) for t in ears} | {(x, y, z)})
    index = {t: i for i, t in enumerate(triangles)}
    by_edge: dict[Edge, list[int]] = defaultdict(list)
    for t, i in index.items():
        a, b, c = t
        for e in ((a, b), (a, c), (b, c)):
            by_edge[e].append(i)
    dual = sorted((ts[0], ts[1], e) for e, ts in by_edge.items() if len(ts) == 2)
    return MaximalOuterplanar(tuple(cycle), tuple(triangles), tuple(dual), tuple(ears))


@dataclass(frozen=True)
class Peeling:
    core: Graph
    removed: dict[int, Triangle]


def _candidate_groups(g: Graph) -> dict[frozenset[int], list[int]]:
    groups: dict[frozenset[int], list[int]] = defaultdict(list)
    for v in range(g.n):
        nb = g.adj[v]
        if len(nb) != 3:
            continue
        a, b, c = nb
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c):
            groups[nb | {v}].append(v)
    return groups


def peel_inner_vertices(g: Graph, inner: Iterable[int] | None = None) -> Peeling:
    """Remove the inner vertices of a would-be inner-chordal graph.

    Every vertex of degree 3 whose neighbourhood is a triangle spans a 4-clique
    with it; such a clique has exactly one inner vertex.  When two such
    vertices share a clique they are interchangeable and the smaller id is
    taken, unless ``inner`` prescribes the choice.
    """
    preferred = set(inner) if inner is not None else None
    removed: dict[int, Triangle] = {}
    used: dict[Triangle, int] = {}
    for clique, members in sorted(_candidate_groups(g).items(), key=lambda kv: min(kv[1])):
        if len(members) > 2 and g.n != 4:
            raise _reject("not_planar_inner_chordal", sorted(clique), "4-clique with three degree-3 vertices")
        if preferred is not None:
            chosen = [v for v in members if v in preferred]
            if len(chosen) > 1:
                raise _reject("not_planar_inner_chordal", chosen, "adjacent inner vertices")
            if not chosen:
                continue
            v = chosen[0]
        else:
            v = min(members)
        tri = tuple(sorted(g.adj[v]))
        if tri in used:
            raise _reject("inner_degree_violation", tri,
                          f"vertices {used[tri]} and {v} cannot both sit inside triangle {tri}")
        used[tri] = v
        removed[v] = tri
    if preferred is not None and set(removed) != preferred:
        bad = sorted(preferred - set(removed))
        raise _reject("inner_degree_violation", bad,
                      "prescribed inner vertices without a triangular neighbourhood")
    keep = [e for e in g.edges if e[0] not in removed and e[1] not in removed]
    return Peeling(build_graph(g.n, keep), removed)


def _chordless_witness(g: Graph) -> tuple[int, ...] | None:
    G = nx.Graph(list(g.edges))
    if nx.is_chordal(G):
        return None
    for cyc in nx.chordless_cycles(G):
        if len(cyc) >= 4:
            k = cyc.index(min(cyc))
            return tuple(cyc[k:] + cyc[:k])
    return None


def _embedding(g: Graph, cycle: tuple[int, ...], removed: dict[int, Triangle]) -> EmbeddedGraph:
    n = len(cycle)
    pos = {v: i for i, v in enumerate(cycle)}
    home: dict[int, dict[int, int]] = defaultdict(dict)
    for m, tri in removed.items():
        for a in tri:
            others = [pos[b] for b in tri if b != a]
            offs = sorted((p - pos[a]) % n for p in others)
            home[a][m] = offs[0]
    rotation: list[tuple[int, ...]] = []
    for v in range(g.n):
        if v in removed:
            rotation.append(tuple(sorted(removed[v], key=pos.__getitem__)))
            continue

        def key(w: int, v: int = v) -> tuple[int, int]:
            if w in pos:
                return ((pos[w] - pos[v]) % n, 0)
            return (home[v][w], 1)

        rotation.append(tuple(sorted(g.adj[v], key=key)))
    return EmbeddedGraph(g, tuple(rotation), (cycle[1], cycle[0]))


def recognize(g: Graph, inner: Iterable[int] | None = None) -> InnerChordalGraph:
    """Recognise ``g`` as a biconnected inner-chordal plane graph.

    Returns the canonical witness embedding (outer cycle counterclockwise,
    starting at the smallest vertex).  Raises :class:`NotInnerChordal` with a
    checkable :class:`RejectReason` otherwise.  ``inner`` optionally fixes the
    set of inner vertices (used when an embedding is read off a drawing).
    """
    if g.n < 3 or not is_connected(g):
        raise _reject("not_biconnected", (), "graph is disconnected or has fewer than three vertices")
    cuts = articulation_points(g)
    if cuts:
        raise _reject("not_biconnected", (cuts[0],), f"vertex {cuts[0]} is a cut vertex")

    if g.n == 4 and len(g.edges) == 6:
        m = min(inner) if inner else 0
        peel = Peeling(build_graph(4, [e for e in g.edges if m not in e]),
                       {m: tuple(x for x in range(4) if x != m)})
    else:
        peel = peel_inner_vertices(g, inner)

    core = peel.core
    n_core = g.n - len(peel.removed)
    excess = len(core.edges) - (2 * n_core - 3)
    if excess > 0:
        worst = max(range(g.n), key=lambda v: (g.degree(v) if v not in peel.removed else -1, -v))
        raise _reject("inner_degree_violation", (worst, g.degree(worst)),
                      f"{excess} edges more than any embedding with degree-3 inner vertices allows")
    try:
        mop = recognize_maximal_outerplanar(core)
    except NotInnerChordal:
        cyc = _chordless_witness(g)
        if cyc is not None:
            raise _reject("chordless_cycle", cyc, f"cycle {list(cyc)} has no chord") from None
        raise
    emb = _embedding(g, mop.outer_cycle, peel.removed)
    marked = {tri: m for m, tri in peel.removed.items()}
    ic = InnerChordalGraph(
        embedded=emb,
        inner_vertices=frozenset(peel.removed),
        outer_cycle=mop.outer_cycle,
        chords=tuple(sorted(e for _, _, e in mop.dual_edges)),
        core_triangles=mop.triangles,
        marked=marked,
    )
    for m in ic.inner_vertices:
        assert g.degree(m) == 3
        assert not (g.adj[m] & ic.inner_vertices)
    return ic


def build_construction_tree(ic: InnerChordalGraph) -> ConstructionTree:
    """Weak dual of the core with the filled triangles promoted to K4 nodes."""
    nodes = []
    for tri in ic.core_triangles:
        m = ic.marked.get(tri)
        nodes.append(TreeNode("K3", tri) if m is None else TreeNode("K4", tri, m))
    index = {tri: i for i, tri in enumerate(ic.core_triangles)}
    by_edge: dict[Edge, list[int]] = defaultdict(list)
    for tri, i in index.items():
        a, b, c = tri
        for e in ((a, b), (a, c), (b, c)):
            by_edge[e].append(i)
    edges = tuple(sorted((ts[0], ts[1], e) for e, ts in by_edge.items() if len(ts) == 2))
    return ConstructionTree(tuple(nodes), edges, ic)
