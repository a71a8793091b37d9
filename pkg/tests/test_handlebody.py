import pytest

from hbsurf.handlebody import (
    HandlebodyError,
    build_handlebody,
    build_spine,
    cycle_rank,
    ps_balls,
)


def test_genus2_spine_is_dumbbell():
    spine = build_spine(2)
    assert len(spine.vertices) == 2
    assert len(spine.edges) == 3
    loops = [e for e in spine.edges if e.is_loop()]
    assert len(loops) == 2
    assert spine.spanning_tree == frozenset({"D0"})
    assert spine.generator_edges() == ("D1", "D2")


def test_genus3_counts():
    spine = build_spine(3)
    assert len(spine.vertices) == 4
    assert len(spine.edges) == 6
    assert cycle_rank(spine) == 3


def test_genus1_rejected():
    with pytest.raises(HandlebodyError):
        build_spine(1)


def test_genus2_ball_slots_match_separating_example():
    hb = build_handlebody(2)
    p1, p2 = hb.balls
    assert {(s.disk, s.side) for s in p1.slots} == {("D1", "A"), ("D1", "B"), ("D0", "A")}
    assert {(s.disk, s.side) for s in p2.slots} == {("D2", "A"), ("D2", "B"), ("D0", "B")}


@pytest.mark.parametrize("genus", [2, 3, 4, 5, 7])
def test_counts_and_bijection(genus):
    hb = build_handlebody(genus)
    assert len(hb.balls) == 2 * genus - 2
    assert len(hb.spine.edges) == 3 * genus - 3
    assert len(hb.side_to_ball) == 6 * genus - 6
    assert cycle_rank(hb.spine) == genus


def test_genus4_example():
    hb = build_handlebody(4)
    assert len(hb.balls) == 6
    assert len(hb.spine.edges) == 9
    assert sum(len(b.slots) for b in hb.balls) == 18


def test_ps_balls_consumes_every_side_once():
    hb = build_handlebody(3)
    seen = set()
    for b in hb.balls:
        for s in b.slots:
            assert s not in seen
            seen.add(s)
    assert len(seen) == 12
