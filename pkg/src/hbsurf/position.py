"""Standard position: the complexity measure and the reduction moves.

The lexicographic measure is (|S .cap. D|, |f^-1(L)|, ..., |f^-1(2)|, |D_ms|):
disk intersection count first, then the histogram of maximal arc chain
lengths read from the longest chains down, then the count of saddles that
meet one annulus slot twice.  Three moves reduce it: the boundary
compression that slides an outermost movable saddle through its disk
(intersection count preserved, nesting simplified), the vertex merge that
pulls one critical piece through a loop disk onto a neighbouring one, and
the removal of a degenerate saddle whose legs are nowhere nested, which
splits it into 3-valent boundary pieces.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .handlebody import SIDE_A, SIDE_B, DiskSide
from .surface import (
    KIND_BOUNDARY,
    KIND_SADDLE,
    KIND_TRIVIAL,
    Arc,
    DEdge,
    Piece,
    SurfaceComplex,
    disk_intersection_count,
    euler_characteristic,
    index,
    total_spine_crossings,
    validate,
    with_pieces_and_arcs,
)


class MoveError(ValueError):
    """A reduction move was requested on an ineligible configuration."""


# ---------------------------------------------------------------------------
# Complexity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ComplexityTuple:
    intersection_count: int
    f_histogram: tuple[tuple[int, int], ...]  # (f value, count), f descending
    movable_saddle_count: int

    def _vector(self, fmax: int) -> tuple:
        counts = dict(self.f_histogram)
        return (self.intersection_count,
                tuple(counts.get(f, 0) for f in range(fmax, 1, -1)),
                self.movable_saddle_count)

    def _fmax(self) -> int:
        return max((f for f, _c in self.f_histogram), default=2)

    def __lt__(self, other: "ComplexityTuple") -> bool:
        fmax = max(self._fmax(), other._fmax())
        return self._vector(fmax) < other._vector(fmax)

    def __le__(self, other: "ComplexityTuple") -> bool:
        return self == other or self < other

    def as_list(self) -> list:
        return [self.intersection_count, [list(e) for e in self.f_histogram],
                self.movable_saddle_count]


def maximal_arc_chains(s: SurfaceComplex, disk: str) -> list[tuple[str, ...]]:
    """All maximal chains of the disk's inner-outer order.

    Arcs pierced by the spine position drop out; incomparable descendants
    split into separate chains.  Every chain is one maximal arc set of the
    corresponding annulus.
    """
    from .surface import honest_parent, spine_span_chain

    idx = index(s)
    pierced = spine_span_chain(s, disk)
    kids: dict[str | None, list[str]] = {}
    for a in idx.arcs_on_disk.get(disk, []):
        if a.id in pierced:
            continue
        kids.setdefault(honest_parent(s, a.id), []).append(a.id)
    chains: list[tuple[str, ...]] = []

    def descend(arc_id: str, prefix: list[str]) -> None:
        prefix = prefix + [arc_id]
        below = kids.get(arc_id, [])
        if not below:
            chains.append(tuple(prefix))
        else:
            for c in below:
                descend(c, prefix)

    for r in kids.get(None, []):
        descend(r, [])
    return chains


@dataclass(frozen=True)
class MaximalArcSet:
    ball: str
    slot: DiskSide
    members: tuple[str, ...]

    @property
    def f(self) -> int:
        return len(self.members)


def maximal_arc_sets(s: SurfaceComplex) -> list[MaximalArcSet]:
    out = []
    for ball in s.handlebody.balls:
        for slot in ball.slots:
            for chain in maximal_arc_chains(s, slot.disk):
                out.append(MaximalArcSet(ball.id, slot, chain))
    return out


def slot_doubled_saddles(s: SurfaceComplex) -> list[str]:
    """Saddles with two or more legs on a single slot copy (the D_ms set)."""
    out = []
    idx = index(s)
    for p in s.pieces:
        if p.kind != KIND_SADDLE:
            continue
        per_slot: dict[tuple, int] = {}
        for d in p.word:
            arc = idx.arcs[d.arc]
            if arc.disk is None:
                continue
            key = (arc.disk, d.side)
            per_slot[key] = per_slot.get(key, 0) + 1
        if any(c >= 2 for c in per_slot.values()):
            out.append(p.id)
    return sorted(out)


def complexity(s: SurfaceComplex) -> ComplexityTuple:
    hist: dict[int, int] = {}
    for aset in maximal_arc_sets(s):
        if aset.f >= 2:
            hist[aset.f] = hist.get(aset.f, 0) + 1
    return ComplexityTuple(
        intersection_count=disk_intersection_count(s),
        f_histogram=tuple(sorted(hist.items(), reverse=True)),
        movable_saddle_count=len(slot_doubled_saddles(s)),
    )


# ---------------------------------------------------------------------------
# Movable saddles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MovableWitness:
    piece: str
    slot: DiskSide
    outer: str
    inner: str
    outermost: bool


def find_movable_saddles(s: SurfaceComplex) -> list[MovableWitness]:
    """Saddles with an inner-outer leg pair on one slot copy.

    A witness is outermost when no other arc lies strictly between the pair
    (the inner arc is the unique span-child of the outer one).
    """
    from .surface import inner_outer

    idx = index(s)
    witnesses = []
    for p in sorted(s.pieces, key=lambda p: p.id):
        if p.kind != KIND_SADDLE:
            continue
        per_slot: dict[tuple, list[str]] = {}
        for d in p.word:
            arc = idx.arcs[d.arc]
            if arc.disk is not None:
                per_slot.setdefault((arc.disk, d.side), []).append(d.arc)
        for (disk, side), arcs in sorted(per_slot.items()):
            if len(arcs) < 2:
                continue
            for inner in arcs:
                for outer in arcs:
                    if inner != outer and inner_outer(s, outer, inner):
                        kids = [c.id for c in idx.children[outer]]
                        witnesses.append(MovableWitness(
                            p.id, DiskSide(disk, side), outer, inner,
                            outermost=(kids == [inner])))
    return witnesses


# ---------------------------------------------------------------------------
# Move 1: boundary compression of an outermost movable saddle
# ---------------------------------------------------------------------------


def boundary_compress(s: SurfaceComplex, witness: MovableWitness) -> SurfaceComplex:
    """Slide the saddle point around the spine point of its disk.

    The isotopy of an outermost movable saddle carries its critical point
    across the disk past the spine position, inducing the boundary
    compressions of the pants-level subsurface.  At the resolution of this
    model nothing is cut: the arcs keep their endpoints and the spine
    position moves into the face between the nested pair, which dissolves
    every inner-outer relation through the outer arc.  |S .cap. D|, chi and
    all pieces are untouched; the complexity drops strictly.
    """
    from dataclasses import replace as _replace

    from .surface import inner_outer, spine_span_chain

    idx = index(s)
    S = idx.pieces.get(witness.piece)
    if S is None or S.kind != KIND_SADDLE:
        raise MoveError("witness piece is not a saddle")
    aout, ain = witness.outer, witness.inner
    arc_out = idx.arcs.get(aout)
    arc_in = idx.arcs.get(ain)
    if arc_out is None or arc_in is None or arc_out.disk is None:
        raise MoveError("witness arcs are not disk arcs")
    side = witness.slot.side
    legs = {d.arc for d in S.word if d.side == side}
    if not {aout, ain} <= legs:
        raise MoveError("witness arcs are not legs of the saddle on that slot")
    if not inner_outer(s, aout, ain):
        raise MoveError("witness arcs admit no inner-outer relation")
    if not witness.outermost or [c.id for c in idx.children[aout]] != [ain]:
        raise MoveError("witness is not outermost: arcs nest between the pair")
    disk = arc_out.disk
    # The saddle point escapes through the face just outside the outer arc,
    # which must be the face holding the spine position.
    outside = ("off", arc_out.parent) if arc_out.parent else ("center",)
    if s.spine_face(disk) != outside:
        raise MoveError("spine position is not adjacent to the outer arc")
    if aout in spine_span_chain(s, disk):
        raise MoveError("outer arc is already pierced by the spine position")
    new_faces = tuple((d, k) for d, k in s.spine_faces if d != disk)
    new_faces += ((disk, ("off", aout)),)
    out = _replace(s, spine_faces=new_faces)
    _check_move(s, out, preserve_intersection=True)
    if not complexity(out) < complexity(s):
        raise MoveError("compression does not reduce the complexity tuple")
    return out


# ---------------------------------------------------------------------------
# Move 2: vertex merge through a loop disk (Fig 6 configuration)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MergeWitness:
    piece: str
    other: str
    chain_arcs: tuple[str, ...]
    nested_pair: tuple[str, str]


def _edge_walks(s: SurfaceComplex, piece_id: str):
    """Graph-edge walks leaving each leg: (far critical piece or None,
    crossed arc ids, pieces passed)."""
    idx = index(s)
    walks = []
    for start in range(idx.pieces[piece_id].legs):
        crossed: list[str] = []
        passed: list[str] = []
        d = idx.pieces[piece_id].word[start]
        arc = idx.arcs[d.arc]
        crossed.append(d.arc)
        try:
            att = idx.other_attachment(d.arc, d.side)
        except KeyError:
            walks.append((None, tuple(crossed), tuple(passed)))
            continue
        guard = 0
        end = None
        while True:
            guard += 1
            if guard > 10000:
                break
            p = idx.pieces[att.piece]
            if p.kind != KIND_TRIVIAL:
                end = (p.id, att.pos)
                break
            passed.append(p.id)
            d = p.word[1 - att.pos]
            crossed.append(d.arc)
            try:
                att = idx.other_attachment(d.arc, d.side)
            except KeyError:
                end = None
                break
        walks.append((end, tuple(crossed), tuple(passed)))
    return walks


def find_merge_candidates(s: SurfaceComplex) -> list[MergeWitness]:
    """Fig 6 configurations: a vertex whose two edges cross nested arcs on
    one disk, one edge reaching exactly one further vertex in the same ball."""
    from .surface import inner_outer

    idx = index(s)

    def strictly_nested(a: str, b: str) -> bool:
        return inner_outer(s, a, b)

    out = []
    for p in sorted(s.pieces, key=lambda p: p.id):
        if p.kind == KIND_TRIVIAL:
            continue
        walks = _edge_walks(s, p.id)
        for k1, (end1, crossed1, passed1) in enumerate(walks):
            if end1 is None or end1[0] == p.id:
                continue
            other = idx.pieces[end1[0]]
            if other.kind == KIND_TRIVIAL or other.ball != p.ball:
                continue
            if any(idx.pieces[t].ball != p.ball for t in passed1):
                continue
            # Arcs reachable beyond the far vertex.
            beyond = set()
            for end2, crossed2, _pp in _edge_walks(s, other.id):
                beyond.update(crossed2)
            for k2, (_e, crossed2, _p2) in enumerate(walks):
                if k2 == k1:
                    continue
                for a1 in beyond:
                    for a2 in crossed2:
                        d1, d2 = idx.arcs[a1], idx.arcs[a2]
                        if d1.disk is None or d1.disk != d2.disk:
                            continue
                        if strictly_nested(a1, a2) or strictly_nested(a2, a1):
                            out.append(MergeWitness(p.id, other.id,
                                                    tuple(crossed1), (a1, a2)))
    # Deduplicate by (piece, other, chain).
    seen = set()
    uniq = []
    for w in out:
        key = (w.piece, w.other, w.chain_arcs)
        if key not in seen:
            seen.add(key)
            uniq.append(w)
    return uniq


def merge_across_arc(s: SurfaceComplex, arc_id: str) -> SurfaceComplex:
    """Pull the far piece through the disk: splice the two pieces, drop the arc."""
    idx = index(s)
    arc = idx.arcs[arc_id]
    atts = idx.attachments[arc_id]
    if len(atts) != 2 or atts[0].piece == atts[1].piece:
        raise MoveError(f"arc {arc_id} is not a gluing of two distinct pieces")
    if idx.children[arc_id]:
        raise MoveError(f"arc {arc_id} has nested arcs inside; cannot pull through")
    from .surface import spine_span_chain
    if arc.disk is not None and arc_id in spine_span_chain(s, arc.disk):
        raise MoveError(f"arc {arc_id} is pierced by the spine position")
    ap, aq = atts
    p, q = idx.pieces[ap.piece], idx.pieces[aq.piece]
    if p.ball != q.ball:
        raise MoveError("pieces lie in different balls; the disk is not a loop disk")
    if aq.sign == -ap.sign:
        sub = [q.word[(aq.pos + k) % q.legs] for k in range(1, q.legs)]
    else:
        sub = [DEdge(d.arc, d.side, -d.sign)
               for d in reversed([q.word[(aq.pos + k) % q.legs] for k in range(1, q.legs)])]
    word = []
    for i, d in enumerate(p.word):
        if i == ap.pos:
            word.extend(sub)
        else:
            word.append(d)
    legs = len(word)
    if p.kind == KIND_TRIVIAL and q.kind == KIND_TRIVIAL:
        kind = KIND_TRIVIAL
    elif legs >= 4:
        kind = KIND_SADDLE
    else:
        kind = KIND_BOUNDARY
    if kind == KIND_SADDLE and legs % 2 != 0:
        raise MoveError("merge would create a saddle with an odd leg count")
    merged = Piece(f"{p.id}+{q.id}", p.ball, kind, tuple(word),
                   spine_crossings=p.spine_crossings + q.spine_crossings)
    new_arcs = [a for a in s.arcs if a.id != arc_id]
    new_pieces = [x for x in s.pieces if x.id not in (p.id, q.id)] + [merged]
    return with_pieces_and_arcs(s, new_arcs, new_pieces)


def merge_vertices(s: SurfaceComplex, witness: MergeWitness) -> SurfaceComplex:
    """Contract the strip chain between the two vertices of a Fig 6 pair."""
    idx = index(s)
    p = idx.pieces.get(witness.piece)
    q = idx.pieces.get(witness.other)
    if p is None or q is None or p.kind == KIND_TRIVIAL or q.kind == KIND_TRIVIAL:
        raise MoveError("merge witness does not name two critical pieces")
    before = complexity(s)
    cur = s
    # Contract along the chain; piece ids change as merges proceed, so the
    # chain is consumed arc by arc.
    for arc_id in witness.chain_arcs:
        cur = merge_across_arc(cur, arc_id)
    after = complexity(cur)
    if not after < before:
        raise MoveError("vertex merge did not reduce complexity")
    _check_move(s, cur, preserve_intersection=False)
    return cur


# ---------------------------------------------------------------------------
# Move 3: removal of a degenerate saddle (Fig 7a)
# ---------------------------------------------------------------------------


def removable_saddles(s: SurfaceComplex) -> list[tuple[str, DiskSide]]:
    """Slot-doubled saddles with no nested pair on any co-vertex edge path."""
    from .surface import inner_outer

    idx = index(s)

    def related(a: str, b: str) -> bool:
        return inner_outer(s, a, b) or inner_outer(s, b, a)

    out = []
    for pid in slot_doubled_saddles(s):
        p = idx.pieces[pid]
        if p.legs == 4:
            continue  # the 8-disk exception of Fig 7(b)
        walks = _edge_walks(s, pid)
        ok = True
        for k1 in range(len(walks)):
            for k2 in range(k1 + 1, len(walks)):
                for a1 in walks[k1][1]:
                    for a2 in walks[k2][1]:
                        d1, d2 = idx.arcs[a1], idx.arcs[a2]
                        if d1.disk is not None and d1.disk == d2.disk and related(a1, a2):
                            ok = False
        if ok:
            per_slot: dict[tuple, int] = {}
            for d in p.word:
                arc = idx.arcs[d.arc]
                if arc.disk is not None:
                    key = (arc.disk, d.side)
                    per_slot[key] = per_slot.get(key, 0) + 1
            slot = min(k for k, c in per_slot.items() if c >= 2)
            out.append((pid, DiskSide(*slot)))
    return out


def remove_movable_saddle(s: SurfaceComplex, witness: tuple[str, DiskSide]) -> SurfaceComplex:
    """Cancel a degenerate saddle point: split into 3-valent boundary pieces.

    The interior critical point of a saddle whose legs are nowhere nested
    can be traded for boundary-critical points; the piece splits into a
    chain of 3-legged pieces glued along internal arcs, leaving the disk
    intersections untouched and dropping |D_ms|.
    """
    pid, slot = witness
    idx = index(s)
    p = idx.pieces.get(pid)
    if p is None or p.kind != KIND_SADDLE:
        raise MoveError("witness is not a saddle")
    if p.legs == 4:
        raise MoveError("8-disk saddles are not removable (Fig 7(b) exception)")
    for w in find_movable_saddles(s):
        if w.piece == pid:
            raise MoveError("saddle has an inner-outer pair: use the "
                            "compression or merge path instead")
    if (pid, slot) not in removable_saddles(s):
        raise MoveError("saddle is not removable: nested arcs on a co-vertex edge path")
    n = p.legs
    arcs = list(s.arcs)
    pieces = [x for x in s.pieces if x.id != pid]
    internal = [Arc(f"{pid}.i{k}", None, ball=p.ball) for k in range(n - 3)]
    arcs.extend(internal)
    for k in range(n - 2):
        word: list[DEdge] = []
        if k == 0:
            word = [p.word[0], p.word[1], DEdge(internal[0].id, SIDE_A, 1)]
        elif k == n - 3:
            word = [DEdge(internal[k - 1].id, SIDE_B, -1), p.word[k + 1], p.word[k + 2]]
        else:
            word = [DEdge(internal[k - 1].id, SIDE_B, -1), p.word[k + 1],
                    DEdge(internal[k].id, SIDE_A, 1)]
        pieces.append(Piece(f"{pid}.s{k}", p.ball, KIND_BOUNDARY, tuple(word),
                            spine_crossings=p.spine_crossings if k == 0 else 0))
    out = with_pieces_and_arcs(s, arcs, pieces)
    _check_move(s, out, preserve_intersection=True)
    return out


# ---------------------------------------------------------------------------
# Normalization and the reduction loop
# ---------------------------------------------------------------------------


def normalize_internal(s: SurfaceComplex) -> tuple[SurfaceComplex, int]:
    """Merge strip chains glued along internal arcs (step-I normalization).

    Complexity-neutral; required before reduction so that coarse pieces are
    maximal.  Self-glued internal arcs (genuine in-ball topology) remain.
    """
    merged = 0
    while True:
        idx = index(s)
        target = None
        for a in s.arcs:
            if not a.internal:
                continue
            atts = idx.attachments[a.id]
            if len(atts) != 2 or atts[0].piece == atts[1].piece:
                continue
            k0 = idx.pieces[atts[0].piece].kind
            k1 = idx.pieces[atts[1].piece].kind
            if KIND_TRIVIAL in (k0, k1):
                target = a.id
                break
        if target is None:
            return s, merged
        s = merge_across_arc(s, target)
        merged += 1


@dataclass(frozen=True)
class MoveRecord:
    kind: str
    detail: tuple
    before: ComplexityTuple
    after: ComplexityTuple


def reduce_to_standard(s: SurfaceComplex) -> tuple[SurfaceComplex, list[MoveRecord]]:
    """Apply reducing moves greedily until none applies.

    Every logged move strictly decreases the complexity tuple, so the loop
    terminates; the log replays deterministically.
    """
    log: list[MoveRecord] = []
    while True:
        before = complexity(s)
        applied = False
        for w in sorted(find_movable_saddles(s),
                        key=lambda w: (w.piece, str(w.slot), w.outer, w.inner)):
            if not w.outermost:
                continue
            try:
                nxt = boundary_compress(s, w)
            except MoveError:
                continue
            after = complexity(nxt)
            assert after < before, "boundary compression must reduce complexity"
            log.append(MoveRecord("boundary_compress",
                                  (w.piece, (w.slot.disk, w.slot.side), w.outer, w.inner),
                                  before, after))
            s = nxt
            applied = True
            break
        if applied:
            continue
        for w in sorted(find_merge_candidates(s), key=lambda w: (w.piece, w.other)):
            try:
                nxt = merge_vertices(s, w)
            except MoveError:
                continue
            after = complexity(nxt)
            log.append(MoveRecord("merge_vertices", (w.piece, w.other, w.chain_arcs),
                                  before, after))
            s = nxt
            applied = True
            break
        if applied:
            continue
        for w in removable_saddles(s):
            try:
                nxt = remove_movable_saddle(s, w)
            except MoveError:
                continue
            after = complexity(nxt)
            assert after < before
            log.append(MoveRecord("remove_movable_saddle",
                                  (w[0], (w[1].disk, w[1].side)), before, after))
            s = nxt
            applied = True
            break
        if not applied:
            return s, log


def replay(s: SurfaceComplex, log: list[MoveRecord]) -> SurfaceComplex:
    """Re-apply a move log; used for audit."""
    for rec in log:
        if rec.kind == "boundary_compress":
            piece, slot, outer, inner = rec.detail
            s = boundary_compress(
                s, MovableWitness(piece, DiskSide(*slot), outer, inner, True))
        elif rec.kind == "merge_vertices":
            piece, other, chain = rec.detail
            s = merge_vertices(s, MergeWitness(piece, other, tuple(chain), ("", "")))
        elif rec.kind == "remove_movable_saddle":
            pid, slot = rec.detail
            s = remove_movable_saddle(s, (pid, DiskSide(*slot)))
        else:
            raise MoveError(f"unknown move kind {rec.kind!r}")
    return s


# ---------------------------------------------------------------------------
# Standard-position property report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StandardReport:
    no_movable_saddles: bool
    large_saddles_cross_spine: bool
    two_disks_off_the_disks: bool
    three_valent_spread: bool
    details: tuple[str, ...] = field(default_factory=tuple)

    def all_pass(self) -> bool:
        return (self.no_movable_saddles and self.large_saddles_cross_spine
                and self.two_disks_off_the_disks and self.three_valent_spread)


def check_standard_properties(s: SurfaceComplex) -> StandardReport:
    idx = index(s)
    details: list[str] = []
    prop2 = not find_movable_saddles(s)
    if not prop2:
        details.append("movable saddles present")
    prop3 = True
    prop4 = True
    prop5 = True
    for p in s.pieces:
        if p.kind == KIND_SADDLE and p.legs >= 5 and p.spine_crossings == 0:
            prop3 = False
            details.append(f"large saddle {p.id} avoids the spine")
        if p.kind == KIND_BOUNDARY and p.legs == 1:
            prop4 = False
            details.append(f"2-disk {p.id} still meets a disk")
        if p.kind == KIND_BOUNDARY and p.legs == 3:
            slots = set()
            for d in p.word:
                arc = idx.arcs[d.arc]
                if arc.disk is not None:
                    slots.add((arc.disk, d.side))
            if len(slots) != 3:
                prop5 = False
                details.append(f"3-valent vertex {p.id} misses an annulus")
    return StandardReport(prop2, prop3, prop4, prop5, tuple(details))


# ---------------------------------------------------------------------------


def _check_move(before: SurfaceComplex, after: SurfaceComplex,
                preserve_intersection: bool) -> None:
    if euler_characteristic(after) != euler_characteristic(before):
        raise MoveError("move changed the Euler characteristic")
    if total_spine_crossings(after) != total_spine_crossings(before):
        raise MoveError("move changed the total spine crossing count")
    if preserve_intersection:
        if disk_intersection_count(after) != disk_intersection_count(before):
            raise MoveError("move changed |S .cap. D|")
    rep = validate(after, check_embedding=False)
    if not rep.ok():
        raise MoveError("move produced an invalid complex: "
                        + "; ".join(v.message for v in rep.errors))
