import pytest

from oorep.graph import (
    EmbeddedGraph,
    GraphError,
    biconnected_blocks,
    build_graph,
    compute_faces,
    is_biconnected,
)
from oorep.generators import octahedron


def test_build_k3():
    g = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    assert g.n == 3 and g.sorted_edges() == [(0, 1), (0, 2), (1, 2)]


@pytest.mark.parametrize("edges, pair", [
    ([(0, 1), (0, 1)], (0, 1)),
    ([(0, 1), (1, 0)], (1, 0)),
    ([(2, 2)], (2, 2)),
    ([(0, 4)], (0, 4)),
])
def test_build_rejects_with_pair(edges, pair):
    with pytest.raises(GraphError) as err:
        build_graph(4, edges)
    assert err.value.pair == pair


def test_octahedron_counts():
    g = octahedron()
    assert len(g.edges) == 12 and all(g.degree(v) == 4 for v in range(6))


def test_k3_faces():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    emb = EmbeddedGraph(g, ((1, 2), (2, 0), (0, 1)), (1, 0))
    faces = compute_faces(emb)
    assert len(faces) == 2
    assert sum(f.is_outer for f in faces) == 1


def test_k4_faces_one_vertex_inside():
    # triangle 0,1,2 counterclockwise with 3 inside
    g = build_graph(4, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3)])
    rot = ((1, 3, 2), (2, 3, 0), (0, 3, 1), (0, 1, 2))
    faces = compute_faces(EmbeddedGraph(g, rot, (1, 0)))
    assert len(faces) == 4
    assert sum(len(f) for f in faces) == 2 * len(g.edges)
    outer = [f for f in faces if f.is_outer]
    assert len(outer) == 1 and set(outer[0].vertices) == {0, 1, 2}


def test_quad_chord_faces():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    rot = ((1, 2, 3), (2, 0), (3, 0, 1), (0, 2))
    faces = compute_faces(EmbeddedGraph(g, rot, (1, 0)))
    assert len(faces) == 3
    assert sorted(len(f) for f in faces) == [3, 3, 4]


def test_inconsistent_rotation_rejected():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises((GraphError, ValueError)):
        compute_faces(EmbeddedGraph(g, ((1, 2), (2, 0), (0,)), (1, 0)))


def test_nonplanar_rotation_rejected():
    # K4 with a rotation of genus one fails the Euler count
    g = build_graph(4, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3)])
    rot = ((1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2))
    with pytest.raises((GraphError, ValueError)):
        compute_faces(EmbeddedGraph(g, rot, (1, 0)))


def test_faces_deterministic_ids():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    emb = EmbeddedGraph(g, ((1, 2), (2, 0), (0, 1)), (1, 0))
    assert [f.id for f in compute_faces(emb)] == [f.id for f in compute_faces(emb)]
    assert [f.id for f in compute_faces(emb)] == sorted(f.id for f in compute_faces(emb))


@pytest.mark.parametrize("n, edges, expected", [
    (3, [(0, 1), (1, 2), (0, 2)], True),
    (3, [(0, 1), (1, 2)], False),
    (5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)], False),
    (2, [(0, 1)], False),
])
def test_is_biconnected(n, edges, expected):
    assert is_biconnected(build_graph(n, edges)) is expected


def test_blocks_of_bowtie():
    g = build_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert sorted(map(sorted, biconnected_blocks(g))) == [[0, 1, 2], [2, 3, 4]]
