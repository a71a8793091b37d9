"""Scratch: final corpus search with span-nested pair and spine faces."""

import itertools

from hbsurf.families import HB2
from hbsurf.surface import Arc, DEdge, Piece, SurfaceComplex, validate, is_orientable
from hbsurf.freegroup import oracle_report
from hbsurf.position import (find_movable_saddles, find_merge_candidates,
                             removable_saddles, reduce_to_standard, complexity)
from hbsurf.polygons import polygon_census
from hbsurf.regions import RegionError
from hbsurf.solver import decide
from hbsurf.documents import canonical_form


def build(sign, d1o, d0o, rest, n=1, spine="std", shield=False):
    """Pieces fixed (v1 structure); layout: p1 spans s1; spine per arg.

    spine: 'std' puts the spine in ('off', p1) (standard position) on both
    meridian disks; 'raw' leaves it at center so the pair is movable.
    shield: Jaco variant, s1 nested under p2 instead (spine at center).
    """
    cs = [f"c{j}" for j in range(1, 2 * n - 1)]
    ds = [f"d{j}" for j in range(1, 2 * n - 1)]

    def d1_arcs(disk, ren):
        out = []
        for aid in d1o:
            name = ren.get(aid, aid)
            if shield and aid == "s1":
                continue
            if aid == "p1" and not shield:
                out.append(Arc(name, disk))
                out.append(Arc(ren.get("s1", "s1"), disk, parent=name))
            else:
                out.append(Arc(name, disk))
                if shield and aid == "p2":
                    out.append(Arc(ren.get("s1", "s1"), disk, parent=name))
            if aid == "p1":
                for c in (cs if disk == "D1" else ds):
                    out.append(Arc(c, disk))
        return out

    ren2 = {"p1": "q1", "s1": "t1", "p2": "q2"}
    arcs = d1_arcs("D1", {}) + d1_arcs("D2", ren2) + [Arc(a, "D0") for a in d0o]
    arcs = [a for a in arcs if not (shield and a.id in ("s1", "t1") and a.parent is None)]

    first1 = cs[0] if cs else "p2"
    first2 = ds[0] if ds else "q2"
    pieces = [
        Piece("A1", "P1", "saddle",
              (DEdge("p1", "A", sign["p1A"]), DEdge("u", "A", sign["uA"]),
               DEdge("p2", "B", sign["p2B"]), DEdge("s1", "A", sign["s1A"])),
              spine_crossings=1),
        Piece("T1", "P1", "trivial",
              (DEdge("p1", "B", sign["p1B"]), DEdge(first1, "A", sign["p2A"]))),
        Piece("E1", "P1", "trivial",
              (DEdge("s1", "B", sign["s1B"]), DEdge("v", "A", sign["vA"]))),
        Piece("A2", "P2", "saddle",
              (DEdge("q1", "A", sign["p1A"]), DEdge("u", "B", -sign["uA"]),
               DEdge("q2", "B", sign["p2B"]), DEdge("t1", "A", sign["s1A"])),
              spine_crossings=1),
        Piece("T2", "P2", "trivial",
              (DEdge("q1", "B", sign["p1B"]), DEdge(first2, "A", sign["p2A"]))),
        Piece("E2", "P2", "trivial",
              (DEdge("t1", "B", sign["s1B"]), DEdge("v", "B", -sign["vA"]))),
    ]
    for route, ball, tag in ((cs + ["p2"], "P1", "T1x"), (ds + ["q2"], "P2", "T2x")):
        for j in range(len(route) - 1):
            pieces.append(Piece(f"{tag}{j+1}", ball, "trivial",
                                (DEdge(route[j], "B", -sign["p2A"]),
                                 DEdge(route[j + 1], "A", sign["p2A"]))))
    faces = ()
    if spine == "std" and not shield:
        faces = (("D1", ("off", "p1")), ("D2", ("off", "q1")))
    return SurfaceComplex(HB2, tuple(arcs), tuple(pieces), faces)


names = ["p1A", "p1B", "p2A", "p2B", "s1A", "s1B", "uA", "vA"]

good = []
for bits in itertools.product([1, -1], repeat=8):
    sign = dict(zip(names, bits))
    for d1o in itertools.permutations(["p1", "p2"]):
        d1o = list(d1o)
        for d0o in (("u", "v"), ("v", "u")):
            s = build(sign, d1o + [None], d0o, None, n=1, spine="std")
            if not validate(s).ok() or not is_orientable(s):
                continue
            if not oracle_report(s).injective:
                continue
            if find_movable_saddles(s) or find_merge_candidates(s) or removable_saddles(s):
                continue
            try:
                pc = polygon_census(s)
            except RegionError:
                continue
            if pc.bigons_per_ball.get("P1") != 1 or pc.bigons_per_ball.get("P2") != 1:
                continue
            raw = build(sign, d1o + [None], d0o, None, n=1, spine="raw")
            if not validate(raw).ok():
                continue
            wits = [w for w in find_movable_saddles(raw) if w.outermost]
            if len(wits) != 2:
                continue
            red, log = reduce_to_standard(raw)
            if len(log) != 2:
                continue
            if canonical_form(red) != canonical_form(s):
                continue
            good.append((sign.copy(), tuple(d1o), d0o))

print("final candidates:", len(good))
for g in good[:6]:
    print(g)

if good:
    sign, d1o, d0o = good[0]
    s = build(sign, list(d1o) + [None], d0o, None, n=1, spine="std")
    print("decide(std):", decide(s).kind)
    raw = build(sign, list(d1o) + [None], d0o, None, n=1, spine="raw")
    v = decide(raw)
    print("decide(raw):", v.kind, "| moves:", v.diagnostics.get("moves"))
    for n in (2, 3):
        s2 = build(sign, list(d1o) + [None], d0o, None, n=n, spine="std")
        ok = validate(s2).ok() and is_orientable(s2)
        inj = oracle_report(s2).injective if ok else None
        try:
            pc2 = polygon_census(s2) if ok else None
            bg = pc2.bigons_per_ball if pc2 else None
        except RegionError:
            bg = "regionerr"
        print(f"n={n}: valid={ok} injective={inj} bigons={bg}")
