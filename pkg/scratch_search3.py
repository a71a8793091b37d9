"""Scratch: filter for move-compatible word shapes; test chains and nesting."""

import itertools

from scratch_search2 import build_full, names
from hbsurf.surface import validate, is_orientable
from hbsurf.freegroup import oracle_report
from hbsurf.position import find_movable_saddles, find_merge_candidates, removable_saddles
from hbsurf.polygons import polygon_census
from hbsurf.regions import RegionError
from hbsurf.solver import decide

good = []
for bits in itertools.product([1, -1], repeat=8):
    sign = dict(zip(names, bits))
    for d1o in itertools.permutations(["s1", "p1", "p2"]):
        for d0o in (("u", "v"), ("v", "u")):
            for rest in (("u", "s1", "p2"), ("p2", "s1", "u")):
                s = build_full(sign, d1o, d0o, rest)
                rep = validate(s)
                if not rep.ok() or not is_orientable(s):
                    continue
                if not oracle_report(s).injective:
                    continue
                if find_movable_saddles(s) or find_merge_candidates(s) or removable_saddles(s):
                    continue
                try:
                    pc = polygon_census(s)
                except RegionError:
                    continue
                if pc.bigons_per_ball.get("P1") == 1 and pc.bigons_per_ball.get("P2") == 1:
                    good.append((sign.copy(), d1o, d0o, rest))

print("opposite-leg candidates:", len(good))
for g in good[:10]:
    print(g)
