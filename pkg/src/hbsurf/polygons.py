"""Polygon enumeration in the complement regions and the saddle bound.

A polygon is a sub-disk of a prospective compressing disk inside one
ps-ball: an embedded cycle on a region boundary alternating chords across
disk faces with paths across sheet sides, cornering on arcs.  Its corners
use distinct essential arcs, each face at most once; a bigon must run along
an essential saddle.  Types are counted up to parallelism, i.e. up to equal
face/arc cycles.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .regions import BallBoundary, ball_boundaries
from .surface import (
    KIND_BOUNDARY,
    KIND_SADDLE,
    Census,
    SurfaceComplex,
    census,
    disk_faces,
    index,
)


@dataclass(frozen=True)
class PolygonType:
    """One polygon up to parallelism.

    ``cycle`` alternates D-sides and S-sides: ((dface, a_in, a_out),
    (sface, a_in, a_out), ...), cyclically, in canonical rotation.  A chord
    key identifies where a D-side can be glued to the matching chord on the
    far side of its disk.
    """

    ball: str
    region: int
    cycle: tuple
    size: int  # 2m, the total number of sides
    bigon: bool
    saddle_polygon: bool

    def chords(self) -> tuple[tuple, ...]:
        """Glue keys with their copy side: (disk, face_key, {arcs}, side)."""
        out = []
        for step in self.cycle:
            face = step[0]
            if isinstance(face, tuple) and len(face) == 2 and hasattr(face[0], "disk"):
                slot, key = face
                out.append((slot.disk, key, frozenset((step[1], step[2])), slot.side))
        return tuple(out)

    def sfaces(self) -> tuple[tuple, ...]:
        return tuple(step[0] for step in self.cycle
                     if not (isinstance(step[0], tuple) and hasattr(step[0][0], "disk")))


def _canonical_cycle(steps: list[tuple]) -> tuple:
    """Minimal rotation/reflection; D-side first."""
    n = len(steps)
    best = None
    for start in range(0, n, 2):
        rot = tuple(steps[start:] + steps[:start])
        if best is None or rot < best:
            best = rot
    rev = [(f, b, a) for (f, a, b) in reversed(steps)]
    # Keep D-sides at even positions after reversal.
    rev = rev[-1:] + rev[:-1] if not _is_dstep(rev[0]) else rev
    for start in range(0, n, 2):
        rot = tuple(rev[start:] + rev[:start])
        if _is_dstep(rot[0]) and rot < best:
            best = rot
    return best


def _is_dstep(step: tuple) -> bool:
    face = step[0]
    return isinstance(face, tuple) and len(face) == 2 and hasattr(face[0], "disk")


def arc_is_essential(s: SurfaceComplex, arc_id: str) -> bool:
    """An arc is inessential only when a side of it is a 2-disk cap."""
    idx = index(s)
    for att in idx.attachments[arc_id]:
        p = idx.pieces[att.piece]
        if p.kind == KIND_BOUNDARY and p.legs <= 1:
            return False
    return True


def enumerate_polygons(s: SurfaceComplex, bb: BallBoundary,
                       region: int) -> list[PolygonType]:
    """All polygon types of one region, canonically ordered.

    Simple alternating cycles on the face incidence structure: corners on
    distinct essential arcs, every face visited at most once, bigons
    required to meet a saddle.
    """
    idx = index(s)
    corners = [c for c in bb.corners if c.region == region
               and arc_is_essential(s, c.arc)]
    # (dface, sface) -> arcs realizing the corner.
    pair_arcs: dict[tuple, list[str]] = {}
    for c in corners:
        pair_arcs.setdefault((c.dface, c.sface), []).append(c.arc)
    dfaces = sorted({c.dface for c in corners}, key=str)
    sfaces = sorted({c.sface for c in corners}, key=str)
    adj_ds: dict[tuple, list[tuple[str, tuple]]] = {}
    for (df, sf), arcs in pair_arcs.items():
        for a in sorted(set(arcs)):
            adj_ds.setdefault(df, []).append((a, sf))
            adj_ds.setdefault(sf, []).append((a, df))

    found: dict[tuple, PolygonType] = {}

    def saddle_cluster(sface: tuple) -> bool:
        cl = sface[0]
        return any(idx.pieces[pid].kind == KIND_SADDLE
                   for pid in bb.clusters.get(cl, []))

    def close_cycle(path_faces: list, path_arcs: list[str]) -> None:
        steps = []
        n = len(path_faces)
        for i, face in enumerate(path_faces):
            a_in = path_arcs[(i - 1) % n]
            a_out = path_arcs[i]
            steps.append((face, a_in, a_out))
        m = n // 2
        if m == 1:
            sface = path_faces[1]
            if not saddle_cluster(sface):
                return
        cyc = _canonical_cycle(steps)
        if cyc in found:
            return
        disks = [st[0][0].disk for st in cyc if _is_dstep(st)]
        saddleflag = _has_alternating_disks(disks)
        ball = bb.ball
        found[cyc] = PolygonType(ball, region, cyc, n, m == 1, saddleflag)

    def dfs(start_df: tuple, path_faces: list, path_arcs: list[str],
            used_faces: set, used_arcs: set) -> None:
        cur = path_faces[-1]
        for a, nxt in adj_ds.get(cur, ()):
            if a in used_arcs:
                continue
            if nxt == start_df and len(path_faces) >= 2:
                close_cycle(path_faces, path_arcs + [a])
                continue
            if nxt in used_faces:
                continue
            is_d = nxt in set(dfaces)
            want_d = len(path_faces) % 2 == 0
            if is_d != want_d:
                continue
            if is_d and str(nxt) < str(start_df):
                continue  # canonical start: smallest D-face
            dfs(start_df, path_faces + [nxt], path_arcs + [a],
                used_faces | {nxt}, used_arcs | {a})

    for df in dfaces:
        dfs(df, [df], [], {df}, set())
    return sorted(found.values(), key=lambda p: (p.size, str(p.cycle)))


def _has_alternating_disks(disks: list[str]) -> bool:
    """4 cyclically ordered chords meeting two distinct disks alternately."""
    m = len(disks)
    if m < 4:
        return False
    for i in range(m):
        for j in range(i + 1, m):
            for k in range(j + 1, m):
                for l in range(k + 1, m):
                    a, b, c, d = disks[i], disks[j], disks[k], disks[l]
                    if a == c and b == d and a != b:
                        return True
    return False


def polygon_check(s: SurfaceComplex, p: PolygonType) -> list[str]:
    """Independent re-validation of one polygon against the definition."""
    problems = []
    if p.size % 2 != 0:
        problems.append("odd number of sides")
    arcs = [st[2] for st in p.cycle]
    if len(set(arcs)) != len(arcs):
        problems.append("an essential arc is crossed twice")
    for a in arcs:
        if not arc_is_essential(s, a):
            problems.append(f"corner on inessential arc {a}")
    for i, st in enumerate(p.cycle):
        if _is_dstep(st) != (i % 2 == 0):
            problems.append("sides do not alternate")
    if p.bigon:
        idx = index(s)
        sface = p.cycle[1][0]
        cl = sface[0]
        boundary = ball_boundaries(s)[p.ball]
        if not any(idx.pieces[pid].kind == KIND_SADDLE
                   for pid in boundary.clusters.get(cl, [])):
            problems.append("bigon does not meet an essential saddle")
    return problems


# ---------------------------------------------------------------------------
# Classes, adjacency, and the saddle bound
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PolygonCensus:
    classes: tuple[PolygonType, ...]
    adjacency: tuple[tuple[int, int], ...]  # index pairs sharing a glue key
    nc: int
    bigons_per_ball: dict[str, int] = field(compare=False, default_factory=dict)

    @property
    def bigon_count(self) -> int:
        return sum(1 for c in self.classes if c.bigon)


def parallelism_classes(polys: list[PolygonType]) -> tuple[list[PolygonType],
                                                           list[tuple[int, int]]]:
    """Distinct types and the shared-edge relation between them.

    Two classes are adjacent when a chord of one can be glued to a chord of
    the other: same disk, face and arc pair, opposite sides.
    """
    classes = sorted(set(polys), key=lambda p: (p.size, str(p.cycle)))
    adj: list[tuple[int, int]] = []
    for i, p in enumerate(classes):
        for j in range(i, len(classes)):
            q = classes[j]
            hit = False
            for (d1, f1, a1, side1) in p.chords():
                for (d2, f2, a2, side2) in q.chords():
                    if d1 == d2 and f1 == f2 and a1 == a2 and side1 != side2:
                        hit = True
            if hit:
                adj.append((i, j))
    return classes, adj


def saddle_bound(s: SurfaceComplex, c: Census | None = None) -> int:
    """N_c = (1/2) sum over x >= 3 of x * C_{2x}."""
    c = c or census(s)
    total = sum(x * cnt for x, cnt in c.critical_counts.items() if x >= 3)
    return (total + 1) // 2


def polygon_census(s: SurfaceComplex) -> PolygonCensus:
    """Enumerate all polygon classes over every region of every ball."""
    polys: list[PolygonType] = []
    per_ball: dict[str, int] = {}
    for ball_id, bb in ball_boundaries(s).items():
        per_ball.setdefault(ball_id, 0)
        for r in bb.regions:
            for p in enumerate_polygons(s, bb, r):
                polys.append(p)
                if p.bigon:
                    per_ball[ball_id] += 1
    classes, adj = parallelism_classes(polys)
    return PolygonCensus(tuple(classes), tuple(adj), saddle_bound(s), per_ball)


def export_polygon_census(pc: PolygonCensus) -> str:
    lines = [f"nc {pc.nc}"]
    for ball, k in sorted(pc.bigons_per_ball.items()):
        lines.append(f"bigons {ball} {k}")
    for i, c in enumerate(pc.classes):
        flags = []
        if c.bigon:
            flags.append("bigon")
        if c.saddle_polygon:
            flags.append("saddle")
        lines.append(f"class {i} ball={c.ball} region={c.region} size={c.size} "
                     f"flags={','.join(flags) or '-'}")
    for i, j in pc.adjacency:
        lines.append(f"adjacent {i} {j}")
    return "\n".join(lines) + "\n"
