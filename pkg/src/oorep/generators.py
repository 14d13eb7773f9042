"""Deterministic instance families, mostly built by gluing cliques along chords."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .graph import Edge, Graph, build_graph, canon
from .recognize import ConstructionTree, TreeNode, merge_tree

FAMILIES = (
    "fan",
    "random_maximal_outerplanar",
    "k4_chain",
    "k4_star",
    "triple_k4_gadget",
    "octahedron",
    "random_construction_tree",
)

# inclusive size bounds; None means the size is ignored
SIZE_BOUNDS = {
    "fan": (3, 10**6),
    "random_maximal_outerplanar": (3, 10**5),
    "k4_chain": (1, 10**5),
    "k4_star": (1, 10**5),
    "triple_k4_gadget": None,
    "octahedron": None,
    "random_construction_tree": (1, 10**5),
}


@dataclass(frozen=True)
class InstanceSpec:
    family: str
    size: int | None = None
    seed: int = 0


@dataclass(frozen=True)
class Instance:
    spec: InstanceSpec
    graph: Graph
    tree: ConstructionTree | None = None

    def to_json(self) -> dict:
        out = {
            "family": self.spec.family,
            "size": self.spec.size,
            "seed": self.spec.seed,
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.sorted_edges()],
        }
        if self.tree is not None:
            out["tree"] = self.tree.to_json()
        return out


class _Gluer:
    """Grows a construction tree by gluing K3/K4 nodes onto free outer edges."""

    def __init__(self, kind: str):
        self.nodes: list[TreeNode] = []
        self.tree_edges: list[tuple[int, int, Edge]] = []
        self.owner: dict[Edge, int] = {}
        self.free: list[Edge] = []
        self.next_id = 0
        a, b, c = self._fresh(3)
        self._add(kind, (a, b, c), None)

    def _fresh(self, k: int) -> list[int]:
        out = list(range(self.next_id, self.next_id + k))
        self.next_id += k
        return out

    def _add(self, kind: str, tri: tuple[int, int, int], across: Edge | None) -> int:
        inner = self._fresh(1)[0] if kind == "K4" else None
        node = len(self.nodes)
        self.nodes.append(TreeNode(kind, tuple(sorted(tri)), inner))
        a, b, c = tri
        for e in (canon(a, b), canon(b, c), canon(a, c)):
            if e == across:
                continue
            self.owner[e] = node
            self.free.append(e)
        return node

    def glue(self, edge: Edge, kind: str) -> int:
        self.free.remove(edge)
        (w,) = self._fresh(1)
        node = self._add(kind, (edge[0], edge[1], w), edge)
        self.tree_edges.append((self.owner[edge], node, edge))
        return node

    def new_edges(self, node: int) -> list[Edge]:
        return [e for e in self.free if self.owner[e] == node]

    def build(self, perm: list[int] | None = None) -> tuple[Graph, ConstructionTree]:
        n = self.next_id
        p = perm if perm is not None else list(range(n))
        nodes = []
        for nd in self.nodes:
            tri = tuple(sorted(p[v] for v in nd.triangle))
            nodes.append(TreeNode(nd.kind, tri, None if nd.inner is None else p[nd.inner]))
        edges = []
        for i, j, (a, b) in self.tree_edges:
            edges.append((min(i, j), max(i, j), canon(p[a], p[b])))
        tree = ConstructionTree(tuple(nodes), tuple(sorted(edges)))
        return merge_tree(tree, n), tree


def fan(n: int) -> Graph:
    """Apex 0 joined to the path 1..n-1."""
    return build_graph(n, [(0, i) for i in range(1, n)] + [(i, i + 1) for i in range(1, n - 1)])


def octahedron() -> Graph:
    return build_graph(6, [(a, b) for a in range(6) for b in range(a + 1, 6) if b != a + 3])


@lru_cache(maxsize=None)
def _catalan(m: int) -> int:
    if m <= 1:
        return 1
    return _catalan(m - 1) * 2 * (2 * m - 1) // (m + 1)


def random_maximal_outerplanar(n: int, rng: random.Random) -> Graph:
    """Uniform random triangulation of a convex n-gon, with shuffled labels."""
    edges = {canon(i, (i + 1) % n) for i in range(n)}
    stack = [(0, n - 1)]
    while stack:
        i, j = stack.pop()
        if j - i < 2:
            continue
        weights = [_catalan(k - i - 1) * _catalan(j - k - 1) for k in range(i + 1, j)]
        r = rng.randrange(sum(weights))
        k = i + 1
        for w in weights:
            if r < w:
                break
            r -= w
            k += 1
        edges.update({canon(i, k), canon(k, j)})
        stack += [(i, k), (k, j)]
    perm = list(range(n))
    rng.shuffle(perm)
    return build_graph(n, [(perm[a], perm[b]) for a, b in edges])


def _k4_chain(k: int) -> _Gluer:
    g = _Gluer("K4")
    last = 0
    for _ in range(k - 1):
        last = g.glue(g.new_edges(last)[0], "K4")
    return g


def _k4_star(m: int) -> _Gluer:
    g = _Gluer("K4")
    for e in list(g.new_edges(0)):
        node = g.glue(e, "K3")
        for _ in range(m - 1):
            node = g.glue(g.new_edges(node)[-1], "K3")
    return g


def _triple_gadget() -> _Gluer:
    g = _Gluer("K4")
    b = g.glue(g.new_edges(0)[0], "K4")
    c = g.glue(g.new_edges(b)[0], "K4")
    for node in (0, b, c):
        for e in list(g.new_edges(node)):
            g.glue(e, "K3")
    return g


def _random_tree(size: int, rng: random.Random, p_k4: float = 0.4) -> _Gluer:
    kind = lambda: "K4" if rng.random() < p_k4 else "K3"  # noqa: E731
    g = _Gluer(kind())
    for _ in range(size - 1):
        g.glue(rng.choice(g.free), kind())
    return g


def generate(spec: InstanceSpec) -> Instance:
    """Build the instance described by ``spec``; identical specs give identical graphs."""
    fam = spec.family
    if fam not in FAMILIES:
        raise ValueError(f"unknown family {fam!r}")
    bounds = SIZE_BOUNDS[fam]
    if bounds is not None:
        if spec.size is None or not bounds[0] <= spec.size <= bounds[1]:
            raise ValueError(f"size for {fam} must lie in [{bounds[0]}, {bounds[1]}], got {spec.size}")
    rng = random.Random(spec.seed)
    if fam == "fan":
        return Instance(spec, fan(spec.size))
    if fam == "octahedron":
        return Instance(spec, octahedron())
    if fam == "random_maximal_outerplanar":
        return Instance(spec, random_maximal_outerplanar(spec.size, rng))
    if fam == "k4_chain":
        gluer = _k4_chain(spec.size)
    elif fam == "k4_star":
        gluer = _k4_star(spec.size)
    elif fam == "triple_k4_gadget":
        gluer = _triple_gadget()
    else:
        gluer = _random_tree(spec.size, rng)
    perm = None
    if fam == "random_construction_tree":
        perm = list(range(gluer.next_id))
        rng.shuffle(perm)
    graph, tree = gluer.build(perm)
    return Instance(spec, graph, tree)
