"""Scratch: search valid RAW forms; let boundary_compress define the std form."""

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


def build_raw(sign, d0o, n=1):
    """Raw motif: movable saddle AR over nested g1>g2, far strips W_out, W_in."""
    arcs = [Arc("g1", "D1"), Arc("g2", "D1", parent="g1")]
    cs = [f"c{j}" for j in range(1, 2 * n - 1)]
    arcs += [Arc(c, "D1") for c in cs] + [Arc("p2", "D1")]
    arcs += [Arc("h1", "D2"), Arc("h2", "D2", parent="h1")]
    ds = [f"d{j}" for j in range(1, 2 * n - 1)]
    arcs += [Arc(d, "D2") for d in ds] + [Arc("q2", "D2")]
    arcs += [Arc(a, "D0") for a in d0o]

    mid1 = DEdge(cs[0] if cs else "p2", "A", sign["m1"])
    pieces = [
        Piece("AR1", "P1", "saddle",
              (DEdge("g1", "B", sign["g1B"]), mid1,
               DEdge("g2", "B", sign["g2B"]), DEdge("v", "A", sign["vA"])),
              spine_crossings=1),
        Piece("W1o", "P1", "trivial",
              (DEdge("g1", "A", sign["g1A"]), DEdge("p2", "B", sign["p2B"]))),
        Piece("W1i", "P1", "trivial",
              (DEdge("g2", "A", sign["g2A"]), DEdge("u", "A", sign["uA"]))),
    ]
    mid2 = DEdge(ds[0] if ds else "q2", "A", sign["m1"])
    pieces += [
        Piece("AR2", "P2", "saddle",
              (DEdge("h1", "B", sign["g1B"]), mid2,
               DEdge("h2", "B", sign["g2B"]), DEdge("v", "B", -sign["vA"])),
              spine_crossings=1),
        Piece("W2o", "P2", "trivial",
              (DEdge("h1", "A", sign["g1A"]), DEdge("q2", "B", sign["p2B"]))),
        Piece("W2i", "P2", "trivial",
              (DEdge("h2", "A", sign["g2A"]), DEdge("u", "B", -sign["uA"]))),
    ]
    # handle chains when n >= 2
    route1 = cs + ["p2"]
    for j in range(len(route1) - 1):
        pieces.append(Piece(f"T1-{j+1}", "P1", "trivial",
                            (DEdge(route1[j], "B", sign["cB"]),
                             DEdge(route1[j + 1], "A", sign["cA"]))))
    route2 = ds + ["q2"]
    for j in range(len(route2) - 1):
        pieces.append(Piece(f"T2-{j+1}", "P2", "trivial",
                            (DEdge(route2[j], "B", sign["cB"]),
                             DEdge(route2[j + 1], "A", sign["cA"]))))
    return SurfaceComplex(HB2, tuple(arcs), tuple(pieces))


names = ["g1A", "g1B", "g2A", "g2B", "m1", "vA", "uA", "p2B", "cA", "cB"]
good = []
for bits in itertools.product([1, -1], repeat=8):
    sign = dict(zip(names[:8], bits))
    sign["cA"] = sign["m1"]
    sign["cB"] = -sign["m1"]
    for d0o in (("u", "v"), ("v", "u")):
        s = build_raw(sign, d0o, n=1)
        rep = validate(s)
        if not rep.ok() or not is_orientable(s):
            continue
        if not oracle_report(s).injective:
            continue
        wits = [w for w in find_movable_saddles(s) if w.outermost]
        if len(wits) != 2:
            continue
        try:
            out = boundary_compress(s, [w for w in wits if w.piece == "AR1"][0])
        except Exception:
            continue
        good.append((sign.copy(), d0o))

print("raw candidates:", len(good))
for sign, d0o in good[:4]:
    s = build_raw(sign, d0o, n=1)
    red, log = reduce_to_standard(s)
    print("---", sign, d0o)
    print("   moves:", [r.kind for r in log],
          " L:", complexity(s).as_list(), "->", complexity(red).as_list())
    ok = validate(red).ok()
    print("   reduced valid:", ok, "orientable:", is_orientable(red))
    if not ok:
        continue
    print("   movable left:", len(find_movable_saddles(red)),
          "merges:", len(find_merge_candidates(red)),
          "removable:", len(removable_saddles(red)))
    try:
        pc = polygon_census(red)
        print("   bigons:", pc.bigons_per_ball, "nc:", pc.nc)
    except RegionError as e:
        print("   region error:", e)
        continue
    print("   oracle:", oracle_report(red).injective)
    for p in red.pieces:
        print("      ", p.id, p.ball, p.kind,
              [(d.arc, d.side, d.sign) for d in p.word])
    print("   arcs:", [(a.id, a.disk, a.parent) for a in red.arcs])
    v = decide(s)
    print("   decide(raw):", v.kind, v.reason)
    break
