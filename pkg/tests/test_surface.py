import pytest

from hbsurf.surface import (
    Arc,
    DEdge,
    Piece,
    census,
    components,
    disk_intersection_count,
    euler_characteristic,
    is_orientable,
    validate,
)

from helpers import (
    collar_annulus,
    crossing_strip,
    handle_annulus,
    inball_annulus,
    make,
    two_cap_disk,
)


def test_empty_surface_rejected():
    rep = validate(make([], []))
    assert not rep.ok()
    assert any("empty surface" in v.message for v in rep.errors)


def test_collar_annulus_valid_and_measures():
    s = collar_annulus()
    rep = validate(s)
    assert rep.ok(), [str(v) for v in rep.entries]
    assert euler_characteristic(s) == 0
    assert disk_intersection_count(s) == 1
    assert is_orientable(s)
    assert len(components(s)) == 1


def test_inball_annulus_counts_no_disk_arcs():
    s = inball_annulus()
    assert validate(s).ok()
    assert euler_characteristic(s) == 0
    assert disk_intersection_count(s) == 0


def test_two_cap_disk_chi_one():
    s = two_cap_disk()
    assert validate(s).ok()
    assert euler_characteristic(s) == 1
    c = census(s)
    assert c.component_count == 1
    assert c.orientable


def test_crossing_strip_is_disk():
    s = crossing_strip()
    rep = validate(s)
    assert rep.ok(), [str(v) for v in rep.entries]
    assert euler_characteristic(s) == 0
    assert census(s).component_count == 1


def test_handle_annulus():
    s = handle_annulus()
    assert validate(s).ok()
    assert euler_characteristic(s) == 0
    assert is_orientable(s)


def test_dangling_arc_reference():
    s = make([Arc("m", "D1")],
             [Piece("r", "P1", "trivial", (DEdge("m", "A", 1), DEdge("gone", "B", 1)))])
    rep = validate(s)
    assert any("dangling arc reference" in v.message for v in rep.errors)


def test_saddle_odd_leg_count_rejected():
    arcs = [Arc("a", "D1"), Arc("b", "D1"), Arc("c", "D0")]
    word = (DEdge("a", "A", 1), DEdge("b", "A", 1), DEdge("c", "A", 1))
    s = make(arcs, [Piece("x", "P1", "saddle", word)])
    rep = validate(s, check_embedding=False)
    assert any("even n >= 4" in v.message for v in rep.errors)


def test_arc_referenced_once_rejected():
    s = make([Arc("m", "D1")], [Piece("r", "P1", "trivial",
                                      (DEdge("m", "A", 1), DEdge("m", "A", -1)))])
    rep = validate(s, check_embedding=False)
    assert not rep.ok()


def test_nesting_cycle_reported():
    arcs = [Arc("a", "D1", parent="b"), Arc("b", "D1", parent="a")]
    pieces = [
        Piece("p", "P1", "trivial", (DEdge("a", "A", 1), DEdge("b", "B", -1))),
        Piece("q", "P1", "trivial", (DEdge("b", "A", 1), DEdge("a", "B", -1))),
    ]
    rep = validate(make(arcs, pieces), check_embedding=False)
    assert any("nesting cycle" in v.message for v in rep.errors)


def test_wrong_ball_rejected():
    s = make([Arc("m", "D1")],
             [Piece("r", "P2", "trivial", (DEdge("m", "A", 1), DEdge("m", "B", -1)))])
    rep = validate(s, check_embedding=False)
    assert any("faces ball" in v.message for v in rep.errors)


def test_moebius_identification_not_orientable():
    # Self-glued strip traversing the arc the same way twice is one-sided.
    s = make([Arc("m", "D1")],
             [Piece("r", "P1", "trivial", (DEdge("m", "A", 1), DEdge("m", "B", 1)))])
    assert validate(s, check_embedding=False).ok()
    assert not is_orientable(s)


def test_large_spineless_saddle_flagged():
    arcs = [Arc(f"a{i}", "D1") for i in range(3)] + [Arc(f"b{i}", "D0") for i in range(3)]
    word = tuple(
        [DEdge(f"a{i}", side, 1) for i in range(3) for side in ("A", "B")][:0]
    )
    word = (
        DEdge("a0", "A", 1), DEdge("b0", "A", 1), DEdge("a1", "A", 1),
        DEdge("b1", "A", 1), DEdge("a2", "A", 1), DEdge("b2", "A", 1),
    )
    s = make(arcs, [Piece("x", "P1", "saddle", word, spine_crossings=0)])
    rep = validate(s, check_embedding=False)
    assert any("avoids the spine" in v.message for v in rep.warnings)
