import pytest

from hbsurf.regions import RegionError, build_ball_boundary, complement_regions

from helpers import (
    collar_annulus,
    crossing_strip,
    handle_annulus,
    inball_annulus,
    make,
    two_cap_disk,
)


def test_empty_ball_single_region():
    s = collar_annulus()
    bb = build_ball_boundary(s, "P2")
    assert len(bb.regions) == 1
    # All three slot disks of the empty ball sit on that one region.
    assert set(bb.dface_region.values()) == {bb.regions[0]}
    assert len(bb.dface_region) == 3


def test_collar_annulus_splits_p1_in_two():
    s = collar_annulus()
    bb = build_ball_boundary(s, "P1")
    assert len(bb.regions) == 2
    # The strip has one side on each region.
    assert bb.sface_region[("r", "L")] != bb.sface_region[("r", "R")]


def test_inball_annulus_two_regions():
    s = inball_annulus()
    bb = build_ball_boundary(s, "P1")
    assert len(bb.regions) == 2
    assert bb.sface_region[("r", "L")] != bb.sface_region[("r", "R")]


def test_crossing_strip_regions():
    s = crossing_strip()
    for ball in ("P1", "P2"):
        bb = build_ball_boundary(s, ball)
        # Two disjoint strips cut the ball into three parts.
        assert len(bb.regions) == 3


def test_two_cap_disk_regions():
    s = two_cap_disk()
    for ball in ("P1", "P2"):
        bb = build_ball_boundary(s, ball)
        assert len(bb.regions) == 2


def test_handle_annulus_regions():
    s = handle_annulus()
    bb = build_ball_boundary(s, "P1")
    # Two parallel strips across the D1 handle cut P1 into three parts.
    assert len(bb.regions) == 3


def test_corner_candidates_reference_region_of_their_face():
    s = crossing_strip()
    bb = build_ball_boundary(s, "P1")
    for c in bb.corners:
        assert bb.dface_region[c.dface] == c.region
        assert bb.sface_region[c.sface] == c.region


def test_complement_regions_cover_all_faces():
    s = crossing_strip()
    regs = complement_regions(s)
    assert {r.ball for r in regs} == {"P1", "P2"}
    for r in regs:
        assert isinstance(r.dfaces, tuple)
    # Every piece side appears exactly once across its ball's regions.
    p1_sfaces = [sf for r in regs if r.ball == "P1" for sf in r.sfaces]
    assert sorted(p1_sfaces) == [("t1", "L"), ("t1", "R"), ("t4", "L"), ("t4", "R")]
