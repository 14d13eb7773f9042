"""Simple graphs, rotation systems and face traversal."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, int]
Dart = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph input; ``pair`` names the offending edge when known."""

    def __init__(self, message: str, pair: Sequence[int] | None = None):
        super().__init__(message)
        self.pair = tuple(pair) if pair is not None else None


def canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return canon(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def non_edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                if canon(u, v) not in self.edges]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Validate ``edge_list`` and return a :class:`Graph` on vertices ``0..n-1``.

    Self-loops, repeated pairs (in either orientation) and out-of-range
    indices raise :class:`GraphError` carrying the offending pair.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    seen: set[Edge] = set()
    for pair in edge_list:
        if len(pair) != 2:
            raise GraphError(f"edge {list(pair)} is not a pair", pair)
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}", (u, v))
        if u == v:
            raise GraphError(f"self-loop at {u}", (u, v))
        e = canon(u, v)
        if e in seen:
            raise GraphError(f"duplicate edge ({u}, {v})", (u, v))
        seen.add(e)
    return Graph(n, frozenset(seen))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in g.adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == g.n


def articulation_points(g: Graph) -> list[int]:
    """Cut vertices of ``g`` (iterative Hopcroft-Tarjan)."""
    disc = [-1] * g.n
    low = [0] * g.n
    cuts: set[int] = set()
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(g.adj[root]))]
        while stack:
            x, parent, it = stack[-1]
            advanced = False
            for y in it:
                if disc[y] == -1:
                    disc[y] = low[y] = timer
                    timer += 1
                    if x == root:
                        root_children += 1
                    stack.append((y, x, iter(g.adj[y])))
                    advanced = True
                    break
                if y != parent:
                    low[x] = min(low[x], disc[y])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[x])
                if parent != root and low[x] >= disc[parent]:
                    cuts.add(parent)
        if root_children > 1:
            cuts.add(root)
    return sorted(cuts)


def is_biconnected(g: Graph) -> bool:
    """Connected, at least three vertices, and no cut vertex."""
    return g.n >= 3 and is_connected(g) and not articulation_points(g)


def biconnected_blocks(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the blocks (maximal biconnected pieces and bridges)."""
    disc = [-1] * g.n
    low = [0] * g.n
    blocks: list[frozenset[int]] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[Edge] = []
        stack = [(root, -1, iter(sorted(g.adj[root])))]
        while stack:
            x, parent, it = stack[-1]
            advanced = False
            for y in it:
                if disc[y] == -1:
                    disc[y] = low[y] = timer
                    timer += 1
                    edge_stack.append((x, y))
                    stack.append((y, x, iter(sorted(g.adj[y]))))
                    advanced = True
                    break
                if y != parent and disc[y] < disc[x]:
                    edge_stack.append((x, y))
                    low[x] = min(low[x], disc[y])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[x])
            if low[x] >= disc[parent]:
                block: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    block.update((a, b))
                    if (a, b) == (parent, x):
                        break
                blocks.append(frozenset(block))
    return blocks


@dataclass(frozen=True)
class Face:
    """A face as the closed sequence of darts that have it on their left."""

    boundary: tuple[Dart, ...]
    is_outer: bool

    @property
    def id(self) -> Dart:
        return min(self.boundary)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(d[0] for d in self.boundary)

    def __len__(self) -> int:
        return len(self.boundary)


@dataclass(frozen=True)
class EmbeddedGraph:
    """A graph with a counterclockwise rotation system and a chosen outer face.

    ``outer_dart`` is any dart whose left face is the outer face.
    """

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    outer_dart: Dart
    _pos: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        g = self.graph
        if len(self.rotation) != g.n:
            raise GraphError("rotation must list every vertex")
        pos = {}
        for v, rot in enumerate(self.rotation):
            if len(rot) != len(set(rot)) or set(rot) != g.adj[v]:
                raise GraphError(f"rotation at {v} is not a permutation of its neighbours")
            for i, w in enumerate(rot):
                pos[(v, w)] = i
        if self.outer_dart not in pos:
            raise GraphError(f"outer dart {self.outer_dart} is not an edge")
        object.__setattr__(self, "_pos", pos)

    def next_dart(self, dart: Dart) -> Dart:
        """Successor of ``dart`` along its left face."""
        u, v = dart
        rot = self.rotation[v]
        return (v, rot[(self._pos[(v, u)] - 1) % len(rot)])

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        return tuple(compute_faces(self))

    @cached_property
    def outer_face(self) -> Face:
        return next(f for f in self.faces if f.is_outer)


def compute_faces(g: EmbeddedGraph) -> list[Face]:
    """Traverse all faces of ``g``; each dart lies on exactly one face.

    Faces are returned sorted by id (their smallest dart). Raises
    :class:`GraphError` if the rotation system violates Euler's formula.
    """
    graph = g.graph
    if not is_connected(graph):
        raise GraphError("face traversal needs a connected graph")
    face_of: dict[Dart, int] = {}
    walks: list[list[Dart]] = []
    for u in range(graph.n):
        for v in g.rotation[u]:
            if (u, v) in face_of:
                continue
            walk = []
            d = (u, v)
            while d not in face_of:
                face_of[d] = len(walks)
                walk.append(d)
                d = g.next_dart(d)
            if d != (u, v):
                raise GraphError("inconsistent rotation: face walk does not close")
            walks.append(walk)
    if graph.n - len(graph.edges) + len(walks) != 2:
        raise GraphError(
            f"rotation is not planar: V - E + F = "
            f"{graph.n - len(graph.edges) + len(walks)}")
    outer = face_of[g.outer_dart]
    faces = []
    for i, walk in enumerate(walks):
        k = walk.index(min(walk))
        faces.append(Face(tuple(walk[k:] + walk[:k]), i == outer))
    faces.sort(key=lambda f: f.id)
    return faces
