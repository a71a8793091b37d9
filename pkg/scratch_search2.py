"""Scratch: full-motif search with every corpus constraint."""

import itertools

from hbsurf.families import HB2
from hbsurf.surface import Arc, DEdge, Piece, SurfaceComplex, validate, is_orientable
from hbsurf.regions import build_ball_boundary, RegionError
from hbsurf.freegroup import oracle_report
from hbsurf.position import find_movable_saddles, find_merge_candidates, removable_saddles
from hbsurf.polygons import polygon_census
from hbsurf.solver import decide


def build_full(sign, d1o, d0o, rest, nest=False):
    def mirror_name(x):
        return {"p1": "q1", "p2": "q2", "s1": "t1"}[x]

    arcs = []
    for aid in d1o:
        if nest and aid == "s1":
            continue
        arcs.append(Arc(aid, "D1"))
        if nest and aid == "p2":
            arcs.append(Arc("s1", "D1", parent="p2"))
    for aid in d1o:
        m = mirror_name(aid)
        if nest and m == "t1":
            continue
        arcs.append(Arc(m, "D2"))
        if nest and m == "q2":
            arcs.append(Arc("t1", "D2", parent="q2"))
    for aid in d0o:
        arcs.append(Arc(aid, "D0"))

    legs1 = {
        "p1": DEdge("p1", "A", sign["p1A"]),
        "u": DEdge("u", "A", sign["uA"]),
        "s1": DEdge("s1", "A", sign["s1A"]),
        "p2": DEdge("p2", "B", sign["p2B"]),
    }
    legs2 = {
        "p1": DEdge("q1", "A", sign["p1A"]),
        "u": DEdge("u", "B", -sign["uA"]),
        "s1": DEdge("t1", "A", sign["s1A"]),
        "p2": DEdge("q2", "B", sign["p2B"]),
    }
    pieces = [
        Piece("A1", "P1", "saddle", (legs1["p1"],) + tuple(legs1[x] for x in rest),
              spine_crossings=1),
        Piece("T1", "P1", "trivial", (DEdge("p1", "B", sign["p1B"]),
                                      DEdge("p2", "A", sign["p2A"]))),
        Piece("E1", "P1", "trivial", (DEdge("s1", "B", sign["s1B"]),
                                      DEdge("v", "A", sign["vA"]))),
        Piece("A2", "P2", "saddle", (legs2["p1"],) + tuple(legs2[x] for x in rest),
              spine_crossings=1),
        Piece("T2", "P2", "trivial", (DEdge("q1", "B", sign["p1B"]),
                                      DEdge("q2", "A", sign["p2A"]))),
        Piece("E2", "P2", "trivial", (DEdge("t1", "B", sign["s1B"]),
                                      DEdge("v", "B", -sign["vA"]))),
    ]
    return SurfaceComplex(HB2, tuple(arcs), tuple(pieces))


names = ["p1A", "p1B", "p2A", "p2B", "s1A", "s1B", "uA", "vA"]
good = []
for bits in itertools.product([1, -1], repeat=8):
    sign = dict(zip(names, bits))
    for d1o in itertools.permutations(["s1", "p1", "p2"]):
        for d0o in (("u", "v"), ("v", "u")):
            for rest in itertools.permutations(["u", "s1", "p2"]):
                s = build_full(sign, d1o, d0o, rest)
                rep = validate(s)
                if not rep.ok():
                    continue
                if not is_orientable(s):
                    continue
                orc = oracle_report(s)
                if not orc.injective:
                    continue
                if find_movable_saddles(s) or find_merge_candidates(s):
                    continue
                if removable_saddles(s):
                    continue
                try:
                    pc = polygon_census(s)
                except RegionError:
                    continue
                if pc.bigons_per_ball.get("P1") != 1 or pc.bigons_per_ball.get("P2") != 1:
                    continue
                good.append((sign.copy(), d1o, d0o, rest, pc.bigon_count,
                             len(pc.classes)))

print("full-motif candidates:", len(good))
for g in good[:6]:
    print(g)

if good:
    sign, d1o, d0o, rest, *_ = good[0]
    s = build_full(sign, d1o, d0o, rest)
    v = decide(s)
    print("decide:", v.kind, v.reason)
    print("diag:", {k: v.diagnostics[k] for k in ("nc", "bigons_per_ball", "bigon_classes")
                    if k in v.diagnostics})
