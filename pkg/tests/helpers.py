"""Hand-built fixture complexes shared across the test modules."""

from hbsurf.handlebody import build_handlebody
from hbsurf.surface import Arc, DEdge, Piece, SurfaceComplex

HB2 = build_handlebody(2)


def make(arcs, pieces, hb=HB2) -> SurfaceComplex:
    return SurfaceComplex(hb, tuple(arcs), tuple(pieces))


def collar_annulus() -> SurfaceComplex:
    """Boundary-parallel annulus over a loop crossing D1 once."""
    arcs = [Arc("m", "D1")]
    pieces = [Piece("r", "P1", "trivial", (DEdge("m", "A", 1), DEdge("m", "B", -1)))]
    return make(arcs, pieces)


def inball_annulus() -> SurfaceComplex:
    """Annulus pushed entirely inside P1: one strip self-glued internally."""
    arcs = [Arc("i", None, ball="P1")]
    pieces = [Piece("r", "P1", "trivial", (DEdge("i", "A", 1), DEdge("i", "B", -1)))]
    return make(arcs, pieces)


def handle_annulus() -> SurfaceComplex:
    """Annulus around the D1 handle: two strips through P1 glued twice."""
    arcs = [Arc("x", "D1"), Arc("y", "D1")]
    pieces = [
        Piece("s1", "P1", "trivial", (DEdge("x", "A", 1), DEdge("y", "B", -1))),
        Piece("s2", "P1", "trivial", (DEdge("y", "A", 1), DEdge("x", "B", -1))),
    ]
    return make(arcs, pieces)


def crossing_strip() -> SurfaceComplex:
    """A disk crossing both balls once: strip chain D1A-D0-D2A closed up.

    Four strips forming a disk that enters P1 through D1, crosses to P2,
    winds through D2 and returns; boundary a single curve.
    """
    arcs = [Arc("x", "D1"), Arc("w", "D0"), Arc("y", "D2"), Arc("z", "D0")]
    pieces = [
        Piece("t1", "P1", "trivial", (DEdge("x", "A", 1), DEdge("w", "A", 1))),
        Piece("t2", "P2", "trivial", (DEdge("w", "B", -1), DEdge("y", "A", 1))),
        Piece("t3", "P2", "trivial", (DEdge("y", "B", -1), DEdge("z", "B", 1))),
        Piece("t4", "P1", "trivial", (DEdge("z", "A", -1), DEdge("x", "B", -1))),
    ]
    return make(arcs, pieces)


def two_piece_disk() -> SurfaceComplex:
    """Two pieces glued along one arc to a single disk (chi = 1)."""
    arcs = [Arc("w", "D0")]
    pieces = [
        Piece("h1", "P1", "trivial", (DEdge("w", "A", 1),)),
        Piece("h2", "P2", "trivial", (DEdge("w", "B", -1),)),
    ]
    # Single-leg strips are not legal trivial pieces; callers that need a
    # valid complex should use boundary_critical kinds here.
    return make(arcs, pieces)


def two_cap_disk() -> SurfaceComplex:
    """Valid two-piece disk: two boundary-critical caps joined across D0."""
    arcs = [Arc("w", "D0")]
    pieces = [
        Piece("h1", "P1", "boundary_critical", (DEdge("w", "A", 1),)),
        Piece("h2", "P2", "boundary_critical", (DEdge("w", "B", -1),)),
    ]
    return make(arcs, pieces)
