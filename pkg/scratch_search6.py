"""Scratch: raw search over pairing/order axes; std := reduce(raw)."""

import itertools

from hbsurf.families import HB2
from hbsurf.surface import Arc, DEdge, Piece, SurfaceComplex, validate, is_orientable
from hbsurf.freegroup import oracle_report
from hbsurf.position import (find_movable_saddles, boundary_compress,
                             reduce_to_standard, complexity, find_merge_candidates,
                             removable_saddles)
from hbsurf.polygons import polygon_census
from hbsurf.regions import RegionError
from hbsurf.solver import decide


def build_raw(sign, d0o, d1_order, mid_order, pairing, n=1):
    cs = [f"c{j}" for j in range(1, 2 * n - 1)]
    ds = [f"d{j}" for j in range(1, 2 * n - 1)]
    arcs = []
    for aid in d1_order:
        arcs.append(Arc(aid, "D1", parent="g1" if aid == "g2" else None))
        if aid == "g2" and cs:
            pass
    # chain arcs parallel, after the nest block
    insert_at = {"D1": cs, "D2": ds}
    arcs += [Arc(c, "D1") for c in cs]
    for aid in d1_order:
        m = {"g1": "h1", "g2": "h2", "p2": "q2"}[aid]
        arcs.append(Arc(m, "D2", parent="h1" if m == "h2" else None))
    arcs += [Arc(d, "D2") for d in ds]
    arcs += [Arc(a, "D0") for a in d0o]

    first1 = cs[0] if cs else "p2"
    first2 = ds[0] if ds else "q2"
    mids1 = {"p": DEdge(first1, "A", sign["m1"]), "v": DEdge("v", "A", sign["vA"])}
    mids2 = {"p": DEdge(first2, "A", sign["m1"]), "v": DEdge("v", "B", -sign["vA"])}
    w1 = (DEdge("g1", "B", sign["g1B"]), mids1[mid_order[0]],
          DEdge("g2", "B", sign["g2B"]), mids1[mid_order[1]])
    w2 = (DEdge("h1", "B", sign["g1B"]), mids2[mid_order[0]],
          DEdge("h2", "B", sign["g2B"]), mids2[mid_order[1]])
    pieces = [Piece("AR1", "P1", "saddle", w1, spine_crossings=1),
              Piece("AR2", "P2", "saddle", w2, spine_crossings=1)]
    if pairing == "oi":
        pieces += [
            Piece("W1o", "P1", "trivial",
                  (DEdge("g1", "A", sign["g1A"]), DEdge("p2", "B", sign["p2B"]))),
            Piece("W1i", "P1", "trivial",
                  (DEdge("g2", "A", sign["g2A"]), DEdge("u", "A", sign["uA"]))),
            Piece("W2o", "P2", "trivial",
                  (DEdge("h1", "A", sign["g1A"]), DEdge("q2", "B", sign["p2B"]))),
            Piece("W2i", "P2", "trivial",
                  (DEdge("h2", "A", sign["g2A"]), DEdge("u", "B", -sign["uA"]))),
        ]
    else:
        pieces += [
            Piece("W1o", "P1", "trivial",
                  (DEdge("g1", "A", sign["g1A"]), DEdge("u", "A", sign["uA"]))),
            Piece("W1i", "P1", "trivial",
                  (DEdge("g2", "A", sign["g2A"]), DEdge("p2", "B", sign["p2B"]))),
            Piece("W2o", "P2", "trivial",
                  (DEdge("h1", "A", sign["g1A"]), DEdge("u", "B", -sign["uA"]))),
            Piece("W2i", "P2", "trivial",
                  (DEdge("h2", "A", sign["g2A"]), DEdge("q2", "B", sign["p2B"]))),
        ]
    route1 = cs + ["p2"]
    for j in range(len(route1) - 1):
        pieces.append(Piece(f"T1-{j+1}", "P1", "trivial",
                            (DEdge(route1[j], "B", -sign["m1"]),
                             DEdge(route1[j + 1], "A", sign["m1"]))))
    route2 = ds + ["q2"]
    for j in range(len(route2) - 1):
        pieces.append(Piece(f"T2-{j+1}", "P2", "trivial",
                            (DEdge(route2[j], "B", -sign["m1"]),
                             DEdge(route2[j + 1], "A", sign["m1"]))))
    return SurfaceComplex(HB2, tuple(arcs), tuple(pieces))


names = ["g1A", "g1B", "g2A", "g2B", "m1", "vA", "uA", "p2B"]
d1_orders = [("g1", "g2", "p2"), ("p2", "g1", "g2")]
found = []
for bits in itertools.product([1, -1], repeat=8):
    sign = dict(zip(names, bits))
    for d1o in d1_orders:
        for d0o in (("u", "v"), ("v", "u")):
            for mid in (("p", "v"), ("v", "p")):
                for pairing in ("oi", "io"):
                    s = build_raw(sign, d0o, d1o, mid, pairing, n=1)
                    if not validate(s).ok() or not is_orientable(s):
                        continue
                    if not oracle_report(s).injective:
                        continue
                    wits = [w for w in find_movable_saddles(s) if w.outermost]
                    if len(wits) != 2:
                        continue
                    try:
                        red, log = reduce_to_standard(s)
                    except Exception:
                        continue
                    if len(log) != 2 or not validate(red).ok():
                        continue
                    found.append((sign.copy(), d1o, d0o, mid, pairing))

print("raw candidates reducing cleanly:", len(found))
for sign, d1o, d0o, mid, pairing in found[:4]:
    s = build_raw(sign, d0o, d1o, mid, pairing, n=1)
    red, log = reduce_to_standard(s)
    print("---", d1o, d0o, mid, pairing, sign)
    print("   L:", complexity(s).as_list(), "->", complexity(red).as_list())
    print("   fixpoint:", not find_movable_saddles(red) and not find_merge_candidates(red)
          and not removable_saddles(red))
    try:
        pc = polygon_census(red)
        print("   bigons:", pc.bigons_per_ball, "nc:", pc.nc)
    except RegionError as e:
        print("   region error:", e)
        continue
    print("   oracle(red):", oracle_report(red).injective)
    for p in sorted(red.pieces, key=lambda p: p.id):
        print("      ", p.id, p.ball, p.kind, [(d.arc, d.side, d.sign) for d in p.word])
    print("   arcs:", [(a.id, a.disk, a.parent) for a in red.arcs])
    vr = decide(s)
    print("   decide(raw):", vr.kind, "| decide(red):", decide(red).kind)
