"""Scratch: search sign/order choices for the Qiu motif that embed per ball."""

import itertools

from hbsurf.families import HB2
from hbsurf.surface import Arc, DEdge, Piece, SurfaceComplex, validate, is_orientable
from hbsurf.regions import build_ball_boundary, RegionError
from hbsurf.freegroup import oracle_report
from hbsurf.position import find_movable_saddles, find_merge_candidates
from hbsurf.polygons import polygon_census


def build_p1(sign, d1_order, d0_order, a1_rest, nest_s1=False):
    """P1 half of the motif; mirror handled separately.

    sign: dict arc->(sign of A-ball-side attachments...) per attachment key.
    a1_rest: order of A1's other three legs after p1.
    """
    arcs = []
    for aid in d1_order:
        if nest_s1 and aid == "s1":
            continue
        arcs.append(Arc(aid, "D1"))
        if nest_s1 and aid == "p2":
            arcs.append(Arc("s1", "D1", parent="p2"))
    for aid in d0_order:
        arcs.append(Arc(aid, "D0"))
    legs = {
        "p1": DEdge("p1", "A", sign["p1A"]),
        "u": DEdge("u", "A", sign["uA"]),
        "s1": DEdge("s1", "A", sign["s1A"]),
        "p2": DEdge("p2", "B", sign["p2B"]),
    }
    word = (legs["p1"],) + tuple(legs[x] for x in a1_rest)
    pieces = [
        Piece("A1", "P1", "saddle", word, spine_crossings=1),
        Piece("T1", "P1", "trivial", (DEdge("p1", "B", sign["p1B"]),
                                      DEdge("p2", "A", sign["p2A"]))),
        Piece("E1", "P1", "trivial", (DEdge("s1", "B", sign["s1B"]),
                                      DEdge("v", "A", sign["vA"]))),
    ]
    return arcs, pieces


def close_p2(sign):
    """Dummy far-side closures so u, v have B attachments for the P1 test."""
    return [
        Piece("Z", "P2", "trivial", (DEdge("u", "B", sign["uB"]),
                                     DEdge("v", "B", sign["vB"]))),
    ]


def p1_candidates(nest_s1=False):
    names = ["p1A", "p1B", "p2A", "p2B", "s1A", "s1B", "uA", "vA", "uB", "vB"]
    found = []
    d1_orders = list(itertools.permutations(["s1", "p1", "p2"]))
    rests = list(itertools.permutations(["u", "s1", "p2"]))
    for bits in itertools.product([1, -1], repeat=8):
        sign = dict(zip(names[:8], bits))
        sign["uB"] = -sign["uA"]
        sign["vB"] = -sign["vA"]
        for d1o in d1_orders:
            for d0o in (("u", "v"), ("v", "u")):
                for rest in rests:
                    arcs, pieces = build_p1(sign, d1o, d0o, rest, nest_s1)
                    s = SurfaceComplex(HB2, tuple(arcs), tuple(pieces + close_p2(sign)))
                    try:
                        bb = build_ball_boundary(s, "P1")
                    except RegionError:
                        continue
                    found.append((sign.copy(), d1o, d0o, rest, len(bb.regions)))
    return found


cands = p1_candidates()
print("embeddable P1 configs:", len(cands))
for c in cands[:8]:
    print(c)
