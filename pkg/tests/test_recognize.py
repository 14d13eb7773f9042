import random

import pytest

from oorep.generators import InstanceSpec, fan, generate, octahedron, random_maximal_outerplanar
from oorep.graph import build_graph
from oorep.recognize import (
    ConstructionTree,
    NotInnerChordal,
    build_construction_tree,
    merge_tree,
    peel_inner_vertices,
    recognize,
    recognize_maximal_outerplanar,
)

from conftest import k4_star_graph

K4 = build_graph(4, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3)])


def reject_kind(g):
    with pytest.raises(NotInnerChordal) as err:
        recognize(g)
    return err.value.reason.kind


def test_octahedron_rejected():
    assert reject_kind(octahedron()) == "inner_degree_violation"


def test_c4_rejected():
    assert reject_kind(build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])) == "chordless_cycle"


def test_path_not_biconnected():
    assert reject_kind(build_graph(3, [(0, 1), (1, 2)])) == "not_biconnected"


def test_f6_tree_is_path_of_four_triangles():
    ic = recognize(fan(6))
    t = ic.tree
    assert len(ic.chords) == 3 and len(t.tree_edges) == 3
    assert t.kinds() == ["K3"] * 4
    assert sorted(t.degree(i) for i in range(4)) == [1, 1, 2, 2]
    assert t.chords == sorted(ic.chords)


def test_k4_single_node():
    ic = recognize(K4)
    assert len(ic.inner_vertices) == 1
    t = build_construction_tree(ic)
    assert t.kinds() == ["K4"] and t.tree_edges == ()


def test_k4_star():
    t = recognize(k4_star_graph()).tree
    assert t.kinds() == ["K3", "K3", "K3", "K4"]
    (hub,) = [i for i, nd in enumerate(t.nodes) if nd.kind == "K4"]
    assert t.degree(hub) == 3
    assert all(t.degree(i) == 1 for i in range(4) if i != hub)


def test_peel_k4():
    p = peel_inner_vertices(K4)
    assert len(p.removed) == 1
    assert len(p.core.edges) == 3


def test_peel_f6_removes_nothing():
    p = peel_inner_vertices(fan(6))
    assert p.removed == {} and p.core.edges == fan(6).edges


def test_peel_k4_plus_triangle():
    # K4 on 0..3 and a triangle 0,1,4 glued on edge 01; 2 and 3 are symmetric
    g = build_graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3), (0, 4), (1, 4)])
    p = peel_inner_vertices(g)
    assert len(p.removed) == 1 and set(p.removed) <= {2, 3}
    mop = recognize_maximal_outerplanar(p.core)
    assert len(mop.outer_cycle) == 4


def test_mop_k3_and_f6():
    mop = recognize_maximal_outerplanar(build_graph(3, [(0, 1), (1, 2), (0, 2)]))
    assert len(mop.outer_cycle) == 3 and len(mop.triangles) == 1 and mop.dual_edges == ()
    mop = recognize_maximal_outerplanar(fan(6))
    assert len(mop.triangles) == 4 and len(mop.dual_edges) == 3


def test_mop_rejects_k4():
    with pytest.raises(NotInnerChordal) as err:
        recognize_maximal_outerplanar(K4)
    assert err.value.reason.kind in ("not_maximal_outerplanar_core", "not_outerplanar")


def test_tree_json_round_trip():
    t = recognize(k4_star_graph()).tree
    assert ConstructionTree.from_json(t.to_json()) == t


@pytest.mark.parametrize("family, size", [
    ("k4_chain", 5), ("k4_star", 4), ("random_construction_tree", 12), ("triple_k4_gadget", None)])
def test_generator_tree_merges_back(family, size):
    inst = generate(InstanceSpec(family, size, 3))
    assert merge_tree(inst.tree, inst.graph.n).edges == inst.graph.edges
    ic = recognize(inst.graph)
    assert sorted(ic.tree.kinds()) == sorted(inst.tree.kinds())
    assert len(ic.chords) == len(inst.tree.tree_edges)


def test_recognized_tree_merges_back():
    rng = random.Random(5)
    for _ in range(20):
        g = random_maximal_outerplanar(rng.randint(3, 40), rng)
        t = recognize(g).tree
        assert merge_tree(t, g.n).edges == g.edges


def test_relabelled_input_gives_isomorphic_tree():
    inst = generate(InstanceSpec("random_construction_tree", 15, 9))
    perm = list(range(inst.graph.n))
    random.Random(1).shuffle(perm)
    g2 = build_graph(inst.graph.n, [(perm[u], perm[v]) for u, v in inst.graph.edges])
    assert recognize(g2).tree.kinds() == recognize(inst.graph).tree.kinds()
