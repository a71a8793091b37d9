"""Scratch: wiring v2 (move-output shape) search + chain growth + variants."""

import itertools

from hbsurf.families import HB2
from hbsurf.surface import Arc, DEdge, Piece, SurfaceComplex, validate, is_orientable
from hbsurf.regions import build_ball_boundary, RegionError
from hbsurf.freegroup import oracle_report, loop_words
from hbsurf.position import (find_movable_saddles, find_merge_candidates,
                             removable_saddles, reduce_to_standard, complexity)
from hbsurf.polygons import polygon_census
from hbsurf.solver import decide
from hbsurf.documents import canonical_form


def build_v2(sign, d1o, d0o, n=1, nest=False, variant="original"):
    """Wiring v2: A1 = [p1,u,s1,p2]; handle chain s1->c..->p2; bridge p1-v-q1."""
    def arcs_for(disk, names_map):
        out = []
        base = [names_map.get(x, x) for x in d1o]
        chain = [names_map.get(f"c{j}", f"c{j}") for j in range(1, 2 * n - 1)]
        # chain arcs sit between s1 and p2 in the layout
        for aid in base:
            real = aid
            if nest and real in (names_map.get("s1", "s1"),):
                continue
            out.append(Arc(real, disk))
            if real == names_map.get("s1", "s1") and chain:
                for c in chain:
                    out.append(Arc(c, disk))
            if nest and real == names_map.get("p2", "p2"):
                out.append(Arc(names_map.get("s1", "s1"), disk,
                               parent=names_map.get("p2", "p2")))
        if not nest and chain and names_map.get("s1", "s1") not in base:
            pass
        return out

    m1 = {}
    m2 = {"p1": "q1", "p2": "q2", "s1": "t1", **{f"c{j}": f"d{j}" for j in range(1, 2 * n - 1)}}
    arcs = arcs_for("D1", m1) + arcs_for("D2", m2)
    for aid in d0o:
        arcs.append(Arc(aid, "D0"))

    def chain_pieces(prefix, ball, names_map, sgn):
        s1, p2 = names_map.get("s1", "s1"), names_map.get("p2", "p2")
        route = [s1] + [names_map.get(f"c{j}", f"c{j}") for j in range(1, 2 * n - 1)] + [p2]
        out = []
        for j in range(len(route) - 1):
            a, b = route[j], route[j + 1]
            out.append(Piece(f"{prefix}{j+1}", ball, "trivial",
                             (DEdge(a, "B", sgn["s1B"]), DEdge(b, "A", sgn["p2A"]))))
        return out

    pieces = []
    if variant == "fig12b":
        word1 = (DEdge("v", "A", sign["vA"]), DEdge("u", "A", sign["uA"]),
                 DEdge("s1", "A", sign["s1A"]), DEdge("p2", "B", sign["p2B"]))
        word2 = (DEdge("v", "B", -sign["vA"]), DEdge("u", "B", -sign["uA"]),
                 DEdge("t1", "A", sign["s1A"]), DEdge("q2", "B", sign["p2B"]))
        arcs = [a for a in arcs if a.id not in ("p1", "q1")]
        pieces.append(Piece("A1", "P1", "saddle", word1, spine_crossings=1))
        pieces.append(Piece("A2", "P2", "saddle", word2, spine_crossings=1))
        pieces += chain_pieces("T1-", "P1", m1, sign)
        pieces += chain_pieces("T2-", "P2", m2, sign)
        return SurfaceComplex(HB2, tuple(arcs), tuple(pieces))

    word1 = (DEdge("p1", "A", sign["p1A"]), DEdge("u", "A", sign["uA"]),
             DEdge("s1", "A", sign["s1A"]), DEdge("p2", "B", sign["p2B"]))
    word2 = (DEdge("q1", "A", sign["p1A"]), DEdge("u", "B", -sign["uA"]),
             DEdge("t1", "A", sign["s1A"]), DEdge("q2", "B", sign["p2B"]))
    pieces.append(Piece("A1", "P1", "saddle", word1, spine_crossings=1))
    pieces += chain_pieces("T1-", "P1", m1, sign)
    pieces.append(Piece("E1", "P1", "trivial",
                        (DEdge("p1", "B", sign["p1B"]), DEdge("v", "A", sign["vA"]))))
    pieces.append(Piece("A2", "P2", "saddle", word2, spine_crossings=1))
    pieces += chain_pieces("T2-", "P2", m2, sign)
    if variant == "fig12a":
        pieces.append(Piece("E2", "P2", "trivial",
                            (DEdge("q1", "B", sign["p1B"]), DEdge("v", "B", -sign["vA"]))))
        # fig12a: flip the direction of the bridge through D2's handle: swap
        # which copy of q1 the bridge strip uses.
        pieces[-1] = Piece("E2", "P2", "trivial",
                           (DEdge("q1", "B", sign["p1B"]), DEdge("v", "B", -sign["vA"])))
    else:
        pieces.append(Piece("E2", "P2", "trivial",
                            (DEdge("q1", "B", sign["p1B"]), DEdge("v", "B", -sign["vA"]))))
    return SurfaceComplex(HB2, tuple(arcs), tuple(pieces))


names = ["p1A", "p1B", "p2A", "p2B", "s1A", "s1B", "uA", "vA"]


def full_filter(s, want_bigons):
    rep = validate(s)
    if not rep.ok() or not is_orientable(s):
        return None
    orc = oracle_report(s)
    if find_movable_saddles(s) or find_merge_candidates(s) or removable_saddles(s):
        return None
    try:
        pc = polygon_census(s)
    except RegionError:
        return None
    if (pc.bigons_per_ball.get("P1", 0), pc.bigons_per_ball.get("P2", 0)) != want_bigons:
        return None
    return orc.injective, pc


good = []
for bits in itertools.product([1, -1], repeat=8):
    sign = dict(zip(names, bits))
    for d1o in itertools.permutations(["p1", "s1", "p2"]):
        for d0o in (("u", "v"), ("v", "u")):
            s = build_v2(sign, d1o, d0o, n=1)
            res = full_filter(s, (1, 1))
            if res and res[0]:
                good.append((sign.copy(), d1o, d0o))

print("v2 std candidates (n=1):", len(good))
for g in good[:6]:
    print(g)

for sign, d1o, d0o in good[:3]:
    ok_all = True
    for n in (2, 3):
        s = build_v2(sign, d1o, d0o, n=n)
        res = full_filter(s, (1, 1))
        if not (res and res[0]):
            ok_all = False
    nest_s = build_v2(sign, d1o, d0o, n=1, nest=True)
    nres = full_filter(nest_s, (0, 0))
    b = build_v2(sign, d1o, d0o, n=1, variant="fig12b")
    brep = validate(b)
    b_ok = brep.ok() and is_orientable(b)
    b_inj = oracle_report(b).injective if b_ok else None
    print("cand", d1o, d0o, "chain n=2,3 ok:", ok_all,
          "jaco-nest:", "OK" if nres else ("inj" if nres else None),
          "12b valid:", b_ok, "12b injective:", b_inj)
