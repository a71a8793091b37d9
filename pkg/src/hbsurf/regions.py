"""Complement regions of a surface complex inside each ps-ball.

The boundary of a ps-ball is a 2-sphere: three slot disks (copies of disks
in the system) plus the pants surface between them.  Arcs, circle segments
and the implicit B-edges of the pieces form an embedded graph on that
sphere; its rotation system is forced by the canonical arc layout, so the
faces can be traced combinatorially (Heffter-Edmonds).  A face trace that
does not close up to chi = 2 per component witnesses an inconsistent
encoding.

Regions of the ball complement are groups of sphere faces merged across
every sheet-free edge and along each side of every surface sheet.  Vertexless
subconfigurations (caps, fully internal sheets) have no canonical placement
on the sphere; they are placed deterministically, which never affects the
face data the polygon engine consumes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .handlebody import SIDE_A, DiskSide
from .surface import (
    SurfaceComplex,
    disk_endpoint_order,
    disk_faces,
    index,
)


class RegionError(ValueError):
    """The encoding admits no consistent spherical boundary structure."""


Dart = tuple[str, int]  # (edge id, 0 = u->v, 1 = v->u)


@dataclass(frozen=True)
class Corner:
    """A polygon corner candidate: crossing one arc between two faces."""

    slot: DiskSide
    arc: str
    dface: tuple  # (slot, face_key)
    sface: tuple  # (cluster id, 'L' | 'R')
    region: int


@dataclass
class BallBoundary:
    ball: str
    regions: list[int] = field(default_factory=list)
    dface_region: dict[tuple, int] = field(default_factory=dict)
    sface_region: dict[tuple, int] = field(default_factory=dict)
    corners: list[Corner] = field(default_factory=list)
    clusters: dict[str, list[str]] = field(default_factory=dict)  # cluster -> pieces
    piece_cluster: dict[str, str] = field(default_factory=dict)
    dface_arcs: dict[tuple, tuple[str, ...]] = field(default_factory=dict)


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def add(self, x) -> None:
        self.parent.setdefault(x, x)

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _clusters(s: SurfaceComplex, ball: str) -> tuple[dict[str, str], dict[str, int]]:
    """Group ball pieces glued along internal arcs; orient each cluster.

    Returns (piece -> cluster key, piece -> flip in {1,-1}).  A flip of -1
    means the piece boundary runs against its written word when the cluster
    is oriented coherently.
    """
    idx = index(s)
    members = [p for p in s.pieces if p.ball == ball]
    uf = _UnionFind()
    for p in members:
        uf.add(p.id)
    for a in s.arcs:
        if a.internal and a.ball == ball:
            atts = idx.attachments[a.id]
            if len(atts) == 2:
                uf.union(atts[0].piece, atts[1].piece)
    flip: dict[str, int] = {}
    cluster_of: dict[str, str] = {}
    groups: dict[str, list[str]] = {}
    for p in members:
        groups.setdefault(uf.find(p.id), []).append(p.id)
    for pids in groups.values():
        key = min(pids)
        for pid in pids:
            cluster_of[pid] = key
        flip[key] = 1
        stack = [key]
        while stack:
            pid = stack.pop()
            for d in idx.pieces[pid].word:
                arc = idx.arcs[d.arc]
                if not arc.internal:
                    continue
                a0, a1 = idx.attachments[d.arc]
                want = -a0.sign * a1.sign
                if a0.piece == a1.piece:
                    if want != 1:
                        raise RegionError(f"one-sided internal gluing at arc {d.arc}")
                    continue
                other = a1.piece if a0.piece == pid else a0.piece
                if other in flip:
                    if flip[other] != flip[pid] * want:
                        raise RegionError(f"one-sided internal gluing at arc {d.arc}")
                else:
                    flip[other] = flip[pid] * want
                    stack.append(other)
    return cluster_of, flip


def build_ball_boundary(s: SurfaceComplex, ball_id: str) -> BallBoundary:
    """Trace the boundary sphere of one ps-ball and cut it into regions."""
    idx = index(s)
    hb = s.handlebody
    ball = hb.ball(ball_id)
    cluster_of, flip = _clusters(s, ball_id)

    # --- assemble the sphere graph -------------------------------------------
    # vertices: ('sv', slot, arc, end) on slot circles, ('iv', arc, end) at
    # internal arc endpoints, ('cap', piece) phantom base of a closed cap loop.
    edges: dict[str, tuple] = {}  # id -> (vu, vv, kind, payload)
    slot_orders: dict[DiskSide, list[tuple[str, int]]] = {}
    bare_slots: list[DiskSide] = []

    for slot in ball.slots:
        order = disk_endpoint_order(s, slot.disk)
        if slot.side != SIDE_A:
            order = list(reversed(order))
        slot_orders[slot] = order
        if not order:
            bare_slots.append(slot)
            continue
        m = len(order)
        for arc_id, _end in order:
            eid = f"chord:{slot.disk}:{slot.side}:{arc_id}"
            if eid not in edges:
                att = idx.attachment(arc_id, slot.side)
                edges[eid] = (("sv", slot, arc_id, 0), ("sv", slot, arc_id, 1), "chord", att)
        for i in range(m):
            a0, e0 = order[i]
            a1, e1 = order[(i + 1) % m]
            edges[f"seg:{slot.disk}:{slot.side}:{i}"] = (
                ("sv", slot, a0, e0), ("sv", slot, a1, e1), "seg", i)

    def d_entry_exit(piece_id: str, pos: int) -> tuple[tuple, tuple]:
        d = idx.pieces[piece_id].word[pos]
        arc = idx.arcs[d.arc]
        lo, hi = (0, 1) if d.sign == 1 else (1, 0)
        if arc.internal:
            return ("iv", d.arc, lo), ("iv", d.arc, hi)
        slot = DiskSide(arc.disk, d.side)
        return ("sv", slot, d.arc, lo), ("sv", slot, d.arc, hi)

    for p in s.pieces:
        if p.ball != ball_id:
            continue
        n = p.legs
        if n == 0:
            v = ("cap", p.id)
            edges[f"cap:{p.id}"] = (v, v, "b", (p.id, 0))
            continue
        for i in range(n):
            _, exit_v = d_entry_exit(p.id, i)
            entry_v, _ = d_entry_exit(p.id, (i + 1) % n)
            edges[f"b:{p.id}:{i}"] = (exit_v, entry_v, "b", (p.id, i))

    # --- rotations ------------------------------------------------------------
    out_darts: dict[tuple, list[Dart]] = {}
    for eid, (vu, vv, _kind, _pl) in edges.items():
        out_darts.setdefault(vu, []).append((eid, 0))
        out_darts.setdefault(vv, []).append((eid, 1))

    def dart_head(d: Dart) -> tuple:
        vu, vv = edges[d[0]][0], edges[d[0]][1]
        return vv if d[1] == 0 else vu

    def dart_tail(d: Dart) -> tuple:
        vu, vv = edges[d[0]][0], edges[d[0]][1]
        return vu if d[1] == 0 else vv

    rotations: dict[tuple, list[Dart]] = {}
    for v, darts in out_darts.items():
        if v[0] == "sv":
            if len(darts) != 4:
                raise RegionError(f"vertex {v} has valence {len(darts)}")
            _tag, slot, arc_id, end = v
            order = slot_orders[slot]
            m = len(order)
            i = order.index((arc_id, end))
            fwd_eid = f"seg:{slot.disk}:{slot.side}:{i}"
            bwd_eid = f"seg:{slot.disk}:{slot.side}:{(i - 1) % m}"
            chord_eid = f"chord:{slot.disk}:{slot.side}:{arc_id}"
            fwd = (fwd_eid, 0 if edges[fwd_eid][0] == v else 1)
            bwd = (bwd_eid, 0 if edges[bwd_eid][0] == v else 1)
            chord = (chord_eid, 0 if edges[chord_eid][0] == v else 1)
            bs = [d for d in darts if edges[d[0]][2] == "b"]
            if len(bs) != 1:
                raise RegionError(f"vertex {v} has {len(bs)} boundary germs, expected 1")
            # Counterclockwise; disk interior to the left of the forward dart.
            rotations[v] = [fwd, chord, bwd, bs[0]]
        else:
            rotations[v] = sorted(darts)

    # --- face trace (faces on the left) ----------------------------------------
    def reverse(d: Dart) -> Dart:
        return (d[0], 1 - d[1])

    def next_dart(d: Dart) -> Dart:
        rot = rotations[dart_head(d)]
        i = rot.index(reverse(d))
        return rot[(i - 1) % len(rot)]

    face_of: dict[Dart, int] = {}
    faces: list[list[Dart]] = []
    for d in sorted((eid, k) for eid in edges for k in (0, 1)):
        if d in face_of:
            continue
        orbit = []
        cur = d
        while cur not in face_of:
            face_of[cur] = len(faces)
            orbit.append(cur)
            cur = next_dart(cur)
        if cur != d:
            raise RegionError("face trace failed to close")
        faces.append(orbit)

    # --- per-component sphere check --------------------------------------------
    comp = _UnionFind()
    for v in out_darts:
        comp.add(v)
    for vu, vv, _k, _pl in edges.values():
        comp.union(vu, vv)
    comp_v: dict = {}
    comp_e: dict = {}
    comp_f: dict = {}
    for v in out_darts:
        comp_v[comp.find(v)] = comp_v.get(comp.find(v), 0) + 1
    for vu, _vv, _k, _pl in edges.values():
        comp_e[comp.find(vu)] = comp_e.get(comp.find(vu), 0) + 1
    for fid, orbit in enumerate(faces):
        comp_f.setdefault(comp.find(dart_tail(orbit[0])), set()).add(fid)
    for root, nv in comp_v.items():
        chi = nv - comp_e.get(root, 0) + len(comp_f.get(root, ()))
        if chi != 2:
            raise RegionError(f"boundary component of ball {ball_id} has chi {chi}")

    # --- identify disk faces ----------------------------------------------------
    bb = BallBoundary(ball=ball_id)
    dface_of_orbit: dict[int, tuple] = {}
    for slot in ball.slots:
        order = slot_orders[slot]
        layout = disk_faces(s, slot.disk)
        for key, arcs in layout.items():
            bb.dface_arcs[(slot, key)] = tuple(arcs)
        if not order:
            continue
        # Balanced walk keys the inner face of every circle segment.
        stack: list[str] = []
        opened: set[str] = set()
        for i in range(len(order)):
            arc_id, _end = order[i]
            if arc_id not in opened:
                opened.add(arc_id)
                stack.append(arc_id)
            else:
                stack.pop()
            key = ("off", stack[-1]) if stack else ("center",)
            inner = face_of[(f"seg:{slot.disk}:{slot.side}:{i}", 0)]
            prev = dface_of_orbit.get(inner)
            if prev is not None and prev != (slot, key):
                raise RegionError(f"inconsistent disk face structure on slot {slot}")
            dface_of_orbit[inner] = (slot, key)

    # --- regions ----------------------------------------------------------------
    uf = _UnionFind()
    for fid in range(len(faces)):
        uf.add(("f", fid))
    ambient = ("ambient",)
    uf.add(ambient)
    for slot in bare_slots:
        uf.add(("bare", slot))
        uf.union(("bare", slot), ambient)
    for eid, (_vu, _vv, kind, _pl) in edges.items():
        if kind == "seg":
            uf.union(("f", face_of[(eid, 0)]), ("f", face_of[(eid, 1)]))

    # Each side of a sheet touches one connected region: union its faces.
    side_faces: dict[tuple, list[int]] = {}
    for eid, (vu, vv, kind, pl) in edges.items():
        if kind == "seg":
            continue
        if kind == "chord":
            att = pl
            pid, travel = att.piece, (eid, 0) if att.sign == 1 else (eid, 1)
        else:
            pid, _pos = pl
            travel = (eid, 0)
        cl = cluster_of[pid]
        coherent = travel if flip[pid] == 1 else reverse(travel)
        side_faces.setdefault((cl, "L"), []).append(face_of[coherent])
        side_faces.setdefault((cl, "R"), []).append(face_of[reverse(coherent)])
    for fids in side_faces.values():
        for f in fids[1:]:
            uf.union(("f", fids[0]), ("f", f))

    # Deterministic placement of disconnected sheet components: join each
    # graph component's largest face to the ambient pool, never collapsing
    # the two sides of a cluster together.
    def would_separate_violation(a, b) -> bool:
        ra, rb = uf.find(a), uf.find(b)
        if ra == rb:
            return False
        for cl in set(cluster_of.values()):
            lf = side_faces.get((cl, "L"))
            rf = side_faces.get((cl, "R"))
            if not lf or not rf:
                continue
            rl, rr = uf.find(("f", lf[0])), uf.find(("f", rf[0]))
            if {rl, rr} == {ra, rb}:
                return True
        return False

    by_root: dict = {}
    for fid, orbit in enumerate(faces):
        by_root.setdefault(comp.find(dart_tail(orbit[0])), []).append(fid)
    for root in sorted(by_root, key=str):
        fids = by_root[root]
        if any(uf.find(("f", f)) == uf.find(ambient) for f in fids):
            continue
        for f in sorted(fids, key=lambda f: (-len(faces[f]), f)):
            if not would_separate_violation(("f", f), ambient):
                uf.union(("f", f), ambient)
                break
        else:
            raise RegionError(f"cannot place boundary component in ball {ball_id}")

    for cl in set(cluster_of.values()):
        lf, rf = side_faces.get((cl, "L")), side_faces.get((cl, "R"))
        if lf and rf and uf.find(("f", lf[0])) == uf.find(("f", rf[0])):
            raise RegionError(f"cluster {cl} does not separate ball {ball_id}")

    # --- package ------------------------------------------------------------------
    region_ids: dict = {}

    def region_num(root) -> int:
        if root not in region_ids:
            region_ids[root] = len(region_ids)
        return region_ids[root]

    region_num(uf.find(ambient))
    for fid in range(len(faces)):
        region_num(uf.find(("f", fid)))
    bb.regions = sorted(set(region_ids.values()))
    for orbit_id, dface in dface_of_orbit.items():
        bb.dface_region[dface] = region_num(uf.find(("f", orbit_id)))
    for slot in bare_slots:
        bb.dface_region[(slot, ("center",))] = region_num(uf.find(("bare", slot)))
    for sface, fids in side_faces.items():
        bb.sface_region[sface] = region_num(uf.find(("f", fids[0])))
    groups: dict[str, list[str]] = {}
    for pid, cl in cluster_of.items():
        groups.setdefault(cl, []).append(pid)
    bb.clusters = {cl: sorted(pids) for cl, pids in groups.items()}
    bb.piece_cluster = dict(cluster_of)

    # Corner candidates: one per (chord, flank face).
    for eid, (vu, _vv, kind, pl) in edges.items():
        if kind != "chord":
            continue
        att = pl
        _tag, slot, arc_id, _end = vu
        travel = (eid, 0) if att.sign == 1 else (eid, 1)
        cl = cluster_of[att.piece]
        coherent = travel if flip[att.piece] == 1 else reverse(travel)
        for dart, side in ((coherent, "L"), (reverse(coherent), "R")):
            dface = dface_of_orbit.get(face_of[dart])
            if dface is None:
                raise RegionError(f"chord {eid} borders a non-disk face")
            bb.corners.append(Corner(slot=slot, arc=arc_id, dface=dface,
                                     sface=(cl, side), region=bb.dface_region[dface]))
    return bb


def ball_boundaries(s: SurfaceComplex) -> dict[str, BallBoundary]:
    return {b.id: build_ball_boundary(s, b.id) for b in s.handlebody.balls}


@dataclass(frozen=True)
class ComplementRegion:
    """One component of a ball complement, with its boundary faces."""

    ball: str
    number: int
    dfaces: tuple[tuple, ...]
    sfaces: tuple[tuple, ...]


def complement_regions(s: SurfaceComplex) -> list[ComplementRegion]:
    """All complement regions, per ps-ball, deterministic order."""
    out: list[ComplementRegion] = []
    for ball in s.handlebody.balls:
        bb = build_ball_boundary(s, ball.id)
        for r in bb.regions:
            dfs = tuple(sorted((df for df, reg in bb.dface_region.items() if reg == r), key=str))
            sfs = tuple(sorted((sf for sf, reg in bb.sface_region.items() if reg == r), key=str))
            out.append(ComplementRegion(ball.id, r, dfs, sfs))
    return out
