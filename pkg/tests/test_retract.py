from hbsurf.retract import (
    GraphEdge,
    RetractGraph,
    betti_number,
    build_graph,
    cut_components,
    expected_fragment_count,
    export_edge_list,
    fragment_count,
    is_trivial,
)
from hbsurf.surface import Arc, DEdge, Piece, euler_characteristic

from helpers import collar_annulus, crossing_strip, handle_annulus, inball_annulus, make


def test_collar_annulus_graph_circle():
    s = collar_annulus()
    g = build_graph(s)
    assert not g.vertices
    assert len(g.edges) == 1
    assert g.edges[0].is_circle
    assert g.edges[0].crossings == ("D1",)
    assert betti_number(g) == 1 == 1 - euler_characteristic(s)
    trivial, _ = is_trivial(g)
    assert not trivial


def test_inball_annulus_graph_trivial():
    s = inball_annulus()
    g = build_graph(s)
    assert g.edges[0].crossings == ()
    trivial, witness = is_trivial(g)
    assert trivial
    assert witness is not None and witness[0].closed


def test_synthetic_inball_loop():
    # Built directly: a loop edge inside one ball with no crossings.
    g = RetractGraph(
        vertices=(("v", 4, "P1"),),
        edges=(GraphEdge("e0", "v", "v", (), ("P1",)),),
    )
    trivial, witness = is_trivial(g)
    assert trivial
    comps = cut_components(g)
    assert list(comps) == ["P1"]


def test_every_edge_crossing_gives_stars():
    s = crossing_strip()
    g = build_graph(s)
    trivial, _ = is_trivial(g)
    assert not trivial
    assert fragment_count(g) == expected_fragment_count(g)


def test_single_saddle_star():
    arcs = [Arc("a", "D1"), Arc("b", "D0"), Arc("c", "D1"), Arc("d", "D0")]
    word = (DEdge("a", "A", 1), DEdge("b", "A", 1), DEdge("c", "A", 1), DEdge("d", "A", 1))
    other = [
        Piece("t1", "P1", "trivial", (DEdge("a", "B", -1), DEdge("c", "B", -1))),
        Piece("t2", "P2", "trivial", (DEdge("b", "B", -1), DEdge("d", "B", -1))),
    ]
    s = make(arcs, [Piece("x", "P1", "saddle", word, spine_crossings=1)] + other)
    g = build_graph(s)
    assert len(g.vertices) == 1
    assert g.vertices[0][1] == 4
    assert betti_number(g) == 1 - euler_characteristic(s)


def test_handle_annulus_betti():
    s = handle_annulus()
    g = build_graph(s)
    assert betti_number(g) == 1


def test_export_edge_list():
    g = build_graph(collar_annulus())
    text = export_edge_list(g)
    assert "edge e0 - - crossings=D1" in text
