"""Outside-obstacle chord orientations.

An orientation of the chords is admissible when every vertex has at most two
incoming chords and two incoming chords at a vertex bound a common face.
Existence is decided by a dynamic program over the construction tree; a
brute-force enumeration serves as the reference oracle.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping

from .graph import Edge, canon
from .recognize import ConstructionTree, InnerChordalGraph, recognize_maximal_outerplanar


@dataclass(frozen=True)
class ChordOrientation:
    direction: Mapping[Edge, int] = field(default_factory=dict)

    def __post_init__(self):
        for (u, v), t in self.direction.items():
            if u >= v or t not in (u, v):
                raise ValueError(f"bad orientation entry {(u, v)} -> {t}")

    def __len__(self) -> int:
        return len(self.direction)

    def __getitem__(self, chord: Edge) -> int:
        return self.direction[canon(*chord)]

    def arcs(self) -> list[tuple[int, int]]:
        """Directed chords as (source, target) pairs, sorted by chord."""
        return [(u if t == v else v, t) for (u, v), t in sorted(self.direction.items())]

    def to_json(self) -> dict:
        return {"chords": [[list(e), "->", t] for e, t in sorted(self.direction.items())]}

    @classmethod
    def from_json(cls, data: dict) -> "ChordOrientation":
        out = {}
        for e, arrow, t in data["chords"]:
            if arrow != "->":
                raise ValueError(f"expected '->' in orientation entry, got {arrow!r}")
            out[canon(*e)] = int(t)
        return cls(out)

    @classmethod
    def from_arcs(cls, arcs: Iterable[tuple[int, int]]) -> "ChordOrientation":
        return cls({canon(s, t): t for s, t in arcs})


@dataclass(frozen=True)
class OrientationCheck:
    ok: bool
    vertex: int | None = None
    edges: tuple[Edge, ...] = ()
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def validate_orientation(ic: InnerChordalGraph, o: ChordOrientation) -> OrientationCheck:
    """Check in-degree at most two and that paired incoming chords share a face."""
    if set(o.direction) != set(ic.chords):
        raise ValueError("orientation domain differs from the chord set")
    incoming: dict[int, list[Edge]] = defaultdict(list)
    for e, t in sorted(o.direction.items()):
        incoming[t].append(e)
    for v in sorted(incoming):
        es = incoming[v]
        if len(es) > 2:
            return OrientationCheck(False, v, tuple(es), f"vertex {v} has in-degree {len(es)}")
        if len(es) == 2:
            a, b = (x for e in es for x in e if x != v)
            if frozenset((v, a, b)) not in ic.inner_faces:
                return OrientationCheck(False, v, tuple(es),
                                        f"incoming chords {es[0]} and {es[1]} at {v} share no face")
    return OrientationCheck(True)


def _pair_ok(kind: str, a: tuple, b: tuple) -> bool:
    if a[0] == "vis" and b[0] == "vis":
        return kind == "K3"
    if a[0] == b[0]:
        return False
    # a visible child chord pairs only with the deep flag of the same child
    return a[1] == b[1] and a[1] != "P"


@lru_cache(maxsize=None)
def _combine(kind: str, parent: tuple[int, int] | None,
             children: tuple[tuple[tuple[int, int], frozenset], ...]) -> dict:
    """Table entries of one node in local coordinates (triangle positions 0..2).

    ``children`` holds, per child chord, the set of its true entries
    ``(target, flag_lo, flag_hi)``.  Returns ``{entry: child choices}`` where
    ``entry`` is ``(target, flag_lo, flag_hi)`` for the parent chord, or
    ``None`` at the root.
    """
    table: dict = {}
    options = [None] if parent is None else list(parent)
    choices = [sorted(entries) for _, entries in children]
    for pt in options:
        for combo in product(*choices):
            contrib: list[list[tuple]] = [[], [], []]
            if pt is not None:
                contrib[pt].append(("vis", "P"))
            for ci, ((lo, hi), (t, dlo, dhi)) in enumerate(zip((c[0] for c in children), combo)):
                contrib[t].append(("vis", ci))
                if dlo:
                    contrib[lo].append(("deep", ci))
                if dhi:
                    contrib[hi].append(("deep", ci))
            if any(len(c) > 2 or (len(c) == 2 and not _pair_ok(kind, *c)) for c in contrib):
                continue
            if pt is None:
                key = None
            else:
                p, q = parent
                key = (pt,
                       int(any(x != ("vis", "P") for x in contrib[p])),
                       int(any(x != ("vis", "P") for x in contrib[q])))
            table.setdefault(key, combo)
        if pt is None and table:
            break
    return table


@dataclass
class DPTable:
    """Per-node true entries ``(target, flag_lo, flag_hi)`` keyed on the parent chord."""

    root: int
    parent: dict[int, tuple[int, Edge]]
    children: dict[int, list[tuple[int, Edge]]]
    entries: dict[int, dict] = field(default_factory=dict)
    root_choice: tuple | None = None

    def true_entries(self, node: int) -> set:
        return set(self.entries.get(node, {}))


def choose_root(t: ConstructionTree) -> int:
    """Smallest node, unless exactly one K4 node has three chords."""
    hubs = [i for i, nd in enumerate(t.nodes) if nd.kind == "K4" and t.degree(i) == 3]
    return hubs[0] if len(hubs) == 1 else 0


def fill_table(t: ConstructionTree, root: int | None = None) -> DPTable:
    if root is None:
        root = choose_root(t)
    parent: dict[int, tuple[int, Edge]] = {}
    children: dict[int, list[tuple[int, Edge]]] = defaultdict(list)
    order = [root]
    seen = {root}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y, e in t.neighbours[x]:
            if y not in seen:
                seen.add(y)
                parent[y] = (x, e)
                children[x].append((y, e))
                order.append(y)
                queue.append(y)
    table = DPTable(root, parent, children)
    for x in reversed(order):
        nd = t.nodes[x]
        loc = {v: i for i, v in enumerate(nd.triangle)}
        specs = []
        for y, (a, b) in children[x]:
            local_entries = frozenset((loc[tt], d0, d1) for tt, d0, d1 in table.entries[y])
            specs.append(((loc[a], loc[b]), local_entries))
        par = None
        if x != root:
            a, b = parent[x][1]
            par = (loc[a], loc[b])
        local = _combine(nd.kind, par, tuple(specs))
        tri = nd.triangle
        glob = {}
        for key, combo in local.items():
            gcombo = tuple((tri[tt], d0, d1) for tt, d0, d1 in combo)
            glob[None if key is None else (tri[key[0]], key[1], key[2])] = gcombo
        table.entries[x] = glob
        if not glob:
            break
    if table.entries.get(root):
        table.root_choice = table.entries[root][None]
    return table


def solve_dp(t: ConstructionTree, root: int | None = None) -> ChordOrientation | None:
    """An admissible chord orientation, or ``None`` if none exists."""
    table = fill_table(t, root)
    if table.root_choice is None:
        return None
    direction: dict[Edge, int] = {}
    stack = [(table.root, table.root_choice)]
    while stack:
        x, combo = stack.pop()
        for (y, e), entry in zip(table.children[x], combo):
            direction[e] = entry[0]
            stack.append((y, table.entries[y][entry]))
    return ChordOrientation(direction)


def greedy_outerplanar(ic: InnerChordalGraph) -> ChordOrientation:
    """Orient by repeatedly directing the edges of a degree-2 vertex towards it."""
    if ic.inner_vertices:
        raise ValueError("greedy orientation needs an outerplanar graph (no K4 nodes)")
    mop = recognize_maximal_outerplanar(ic.graph)
    arcs: list[tuple[int, int]] = []
    for v, a, b in mop.ears:
        arcs += [(a, v), (b, v)]
    removed = {v for v, _, _ in mop.ears}
    x, y, z = sorted(set(range(ic.graph.n)) - removed)
    arcs += [(y, x), (z, x), (z, y)]
    chords = set(ic.chords)
    return ChordOrientation.from_arcs(a for a in arcs if canon(*a) in chords)


class OracleBoundExceeded(ValueError):
    pass


def _source_of(t: ConstructionTree | InnerChordalGraph) -> InnerChordalGraph:
    if isinstance(t, InnerChordalGraph):
        return t
    if t.source is None:
        raise ValueError("construction tree carries no graph")
    return t.source


def enumerate_orientation(t: ConstructionTree | InnerChordalGraph,
                          max_chords: int = 20) -> ChordOrientation | None:
    """First admissible orientation in lexicographic order over all 2^k choices."""
    ic = _source_of(t)
    chords = list(ic.chords)
    k = len(chords)
    if k > max_chords:
        raise OracleBoundExceeded(f"{k} chords exceed the enumeration bound {max_chords}")
    faces = ic.inner_faces
    for mask in range(1 << k):
        incoming: dict[int, list[int]] = {}
        ok = True
        for i, (u, v) in enumerate(chords):
            tgt, src = (v, u) if mask >> i & 1 else (u, v)
            lst = incoming.setdefault(tgt, [])
            if len(lst) == 2:
                ok = False
                break
            if lst and frozenset((tgt, src, lst[0])) not in faces:
                ok = False
                break
            lst.append(src)
        if ok:
            return ChordOrientation({e: (e[1] if mask >> i & 1 else e[0])
                                     for i, e in enumerate(chords)})
    return None


def enumerate_exists(t: ConstructionTree | InnerChordalGraph, max_chords: int = 20) -> bool:
    return enumerate_orientation(t, max_chords) is not None


def decide_single_hub(t: ConstructionTree) -> bool:
    """At most one K4 node all of whose outer edges are chords."""
    return sum(1 for i, nd in enumerate(t.nodes) if nd.kind == "K4" and t.degree(i) == 3) <= 1
