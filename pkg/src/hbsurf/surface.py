"""Surface complexes: disk pieces glued along arcs on the disk system.

A pseudo-essential surface cut along the disk system falls apart into disk
pieces, one ps-ball each.  A piece boundary alternates D-edges (arcs on the
disks, shared with the piece on the far side) and B-edges (arcs of the
surface boundary on the handlebody boundary, implicit between consecutive
D-edges).  Arcs on one disk carry a nesting forest: the inner-outer order of
their off-center sub-disks.  An arc may instead be internal to one ps-ball
(a gluing at a horizontal level away from the disk system); internal arcs do
not count toward the disk intersection number.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .handlebody import SIDE_A, SIDE_B, SIDES, DiskSide, Handlebody

KIND_TRIVIAL = "trivial"
KIND_BOUNDARY = "boundary_critical"
KIND_SADDLE = "saddle"
KINDS = (KIND_TRIVIAL, KIND_BOUNDARY, KIND_SADDLE)


@dataclass(frozen=True)
class Arc:
    """One arc of the surface on a disk (or one internal gluing arc).

    ``disk`` is None for internal arcs, which then carry the ps-ball they
    live in.  ``parent`` is the nesting parent on the same disk; sibling
    order is the order of appearance in the complex arc list.
    """

    id: str
    disk: str | None
    parent: str | None = None
    ball: str | None = None

    @property
    def internal(self) -> bool:
        return self.disk is None


@dataclass(frozen=True)
class DEdge:
    """One D-edge of a piece boundary: arc, attachment side, direction.

    ``sign`` +1 traverses the arc from endpoint 0 to endpoint 1 in the
    canonical layout of its disk; -1 the other way.
    """

    arc: str
    side: str
    sign: int

    def __post_init__(self):
        if self.side not in SIDES or self.sign not in (1, -1):
            raise ValueError(f"bad D-edge {self}")


@dataclass(frozen=True)
class Piece:
    """A 2n-disk piece of the surface inside one ps-ball.

    The boundary word lists D-edges in cyclic order; a B-edge sits between
    consecutive entries (and around the end).  An empty word encodes a cap:
    a 2-disk whose whole boundary is one closed curve on the handlebody
    boundary.
    """

    id: str
    ball: str
    kind: str
    word: tuple[DEdge, ...]
    spine_crossings: int = 0

    @property
    def legs(self) -> int:
        return len(self.word)


@dataclass(frozen=True)
class SurfaceComplex:
    """The surface: pieces, arcs with their per-disk layout, spine positions.

    ``spine_faces`` records, per disk, which face of the arc arrangement
    holds the spine point; absent disks default to the root-level face
    ('center',).  An arc whose span contains the spine point crosses the
    annulus in two stubs and takes part in no inner-outer relation.
    """

    handlebody: Handlebody
    arcs: tuple[Arc, ...]
    pieces: tuple[Piece, ...]
    spine_faces: tuple[tuple[str, tuple], ...] = ()

    def arc(self, arc_id: str) -> Arc:
        return index(self).arcs[arc_id]

    def piece(self, piece_id: str) -> Piece:
        return index(self).pieces[piece_id]

    def spine_face(self, disk: str) -> tuple:
        for d, key in self.spine_faces:
            if d == disk:
                return key
        return ("center",)


@dataclass(frozen=True)
class Attachment:
    piece: str
    pos: int  # word position
    side: str
    sign: int


class Index:
    """Lookup tables derived from a complex; rebuilt on demand."""

    def __init__(self, s: SurfaceComplex):
        self.arcs: dict[str, Arc] = {}
        for a in s.arcs:
            if a.id in self.arcs:
                raise ValueError(f"duplicate arc id {a.id!r}")
            self.arcs[a.id] = a
        self.pieces: dict[str, Piece] = {}
        for p in s.pieces:
            if p.id in self.pieces:
                raise ValueError(f"duplicate piece id {p.id!r}")
            self.pieces[p.id] = p
        self.attachments: dict[str, list[Attachment]] = {a.id: [] for a in s.arcs}
        for p in s.pieces:
            for i, d in enumerate(p.word):
                if d.arc in self.attachments:
                    self.attachments[d.arc].append(Attachment(p.id, i, d.side, d.sign))
        self.arcs_on_disk: dict[str, list[Arc]] = {}
        for a in s.arcs:
            if a.disk is not None:
                self.arcs_on_disk.setdefault(a.disk, []).append(a)
        self.children: dict[str, list[Arc]] = {a.id: [] for a in s.arcs}
        self.roots_on_disk: dict[str, list[Arc]] = {}
        for d, arcs in self.arcs_on_disk.items():
            for a in arcs:
                if a.parent is None:
                    self.roots_on_disk.setdefault(d, []).append(a)
                elif a.parent in self.children:
                    self.children[a.parent].append(a)

    def attachment(self, arc_id: str, side: str) -> Attachment:
        for att in self.attachments[arc_id]:
            if att.side == side:
                return att
        raise KeyError((arc_id, side))

    def other_attachment(self, arc_id: str, side: str) -> Attachment:
        return self.attachment(arc_id, SIDE_B if side == SIDE_A else SIDE_A)


def index(s: SurfaceComplex) -> Index:
    return Index(s)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

ERROR = "error"
WARNING = "warning"


@dataclass(frozen=True)
class Violation:
    severity: str
    location: str
    message: str


@dataclass
class ValidationReport:
    entries: list[Violation] = field(default_factory=list)

    def add(self, severity: str, location: str, message: str) -> None:
        self.entries.append(Violation(severity, location, message))

    @property
    def errors(self) -> list[Violation]:
        return [v for v in self.entries if v.severity == ERROR]

    @property
    def warnings(self) -> list[Violation]:
        return [v for v in self.entries if v.severity == WARNING]

    def ok(self) -> bool:
        return not self.errors

    def empty(self) -> bool:
        return not self.entries


def validate(s: SurfaceComplex, check_embedding: bool = True) -> ValidationReport:
    """Check every structural invariant of the complex.

    An empty report means valid.  Warnings cover the standard-position
    pre-checks (spine-avoiding large saddles, branching nesting) that do not
    make the encoding unusable.
    """
    rep = ValidationReport()
    if not s.pieces:
        rep.add(ERROR, "complex", "empty surface")
        return rep
    try:
        idx = index(s)
    except ValueError as exc:
        rep.add(ERROR, "complex", str(exc))
        return rep
    hb = s.handlebody
    disk_ids = set(hb.disk_ids)
    ball_ids = {b.id for b in hb.balls}

    for a in s.arcs:
        if a.internal:
            if a.ball not in ball_ids:
                rep.add(ERROR, f"arc {a.id}", f"internal arc in unknown ball {a.ball!r}")
            if a.parent is not None:
                rep.add(ERROR, f"arc {a.id}", "internal arcs do not nest")
        else:
            if a.disk not in disk_ids:
                rep.add(ERROR, f"arc {a.id}", f"unknown disk {a.disk!r}")
            if a.parent is not None:
                pa = idx.arcs.get(a.parent)
                if pa is None:
                    rep.add(ERROR, f"arc {a.id}", f"dangling nesting parent {a.parent!r}")
                elif pa.disk != a.disk:
                    rep.add(ERROR, f"arc {a.id}", "nesting parent lies on a different disk")
    # Nesting must be a forest.
    state: dict[str, int] = {}
    for a in s.arcs:
        chain = []
        cur: Arc | None = a
        while cur is not None and state.get(cur.id, 0) == 0:
            chain.append(cur.id)
            state[cur.id] = 1
            cur = idx.arcs.get(cur.parent) if cur.parent else None
        if cur is not None and state.get(cur.id) == 1:
            rep.add(ERROR, f"arc {cur.id}", "nesting cycle")
        for cid in chain:
            state[cid] = 2
    for a in s.arcs:
        if len(idx.children.get(a.id, [])) > 1:
            rep.add(WARNING, f"arc {a.id}", "branching nesting (maximal arc sets read as chains)")

    for p in s.pieces:
        loc = f"piece {p.id}"
        if p.ball not in ball_ids:
            rep.add(ERROR, loc, f"unknown ps-ball {p.ball!r}")
            continue
        if p.kind not in KINDS:
            rep.add(ERROR, loc, f"unknown kind {p.kind!r}")
            continue
        if p.spine_crossings < 0:
            rep.add(ERROR, loc, "negative spine_crossings")
        seen_arcs: set[str] = set()
        for d in p.word:
            a = idx.arcs.get(d.arc)
            if a is None:
                rep.add(ERROR, loc, f"dangling arc reference {d.arc!r}")
                continue
            if a.internal:
                if a.ball != p.ball:
                    rep.add(ERROR, loc, f"internal arc {a.id} belongs to ball {a.ball}")
            else:
                expected = hb.ball_of_side(DiskSide(a.disk, d.side))
                if expected != p.ball:
                    rep.add(ERROR, loc,
                            f"arc {a.id} side {d.side} faces ball {expected}, piece sits in {p.ball}")
            seen_arcs.add(d.arc)
        n = p.legs
        if p.kind == KIND_TRIVIAL and n != 2:
            rep.add(ERROR, loc, f"trivial piece must have exactly 2 D-edges, has {n}")
        if p.kind == KIND_BOUNDARY and n > 3:
            rep.add(ERROR, loc, f"boundary-critical piece must have at most 3 D-edges, has {n}")
        if p.kind == KIND_SADDLE:
            if n < 4 or n % 2 != 0:
                rep.add(ERROR, loc, f"saddle must have even n >= 4, has n={n}")
            elif n >= 5 and p.spine_crossings == 0:
                rep.add(WARNING, loc,
                        "large saddle avoids the spine (standard-position property 3 pre-check)")

    for arc_id, atts in idx.attachments.items():
        if len(atts) != 2:
            rep.add(ERROR, f"arc {arc_id}",
                    f"referenced by {len(atts)} piece boundary edges, expected 2")
            continue
        sides = sorted(att.side for att in atts)
        if sides != [SIDE_A, SIDE_B]:
            rep.add(ERROR, f"arc {arc_id}", "both references on the same side")

    for disk, key in s.spine_faces:
        if disk not in disk_ids:
            rep.add(ERROR, f"disk {disk}", "spine face on unknown disk")
        elif key != ("center",):
            if len(key) != 2 or key[0] != "off" or key[1] not in idx.arcs:
                rep.add(ERROR, f"disk {disk}", f"bad spine face {key!r}")
            elif idx.arcs[key[1]].disk != disk:
                rep.add(ERROR, f"disk {disk}", "spine face names an arc of another disk")

    if check_embedding and rep.ok():
        from . import regions as _regions

        for ball in hb.balls:
            try:
                _regions.build_ball_boundary(s, ball.id)
            except _regions.RegionError as exc:
                rep.add(ERROR, f"ball {ball.id}", f"non-spherical boundary structure: {exc}")
    return rep


# ---------------------------------------------------------------------------
# Basic measures
# ---------------------------------------------------------------------------


def euler_characteristic(s: SurfaceComplex) -> int:
    """chi(S) = pieces - arcs, every piece a disk and every arc a gluing."""
    return len(s.pieces) - len(s.arcs)


def disk_intersection_count(s: SurfaceComplex) -> int:
    """|S .cap. D|: arcs on the disk system (internal arcs excluded)."""
    return sum(1 for a in s.arcs if not a.internal)


def components(s: SurfaceComplex) -> list[set[str]]:
    """Connected components of the piece-adjacency graph."""
    idx = index(s)
    parent = {p.id: p.id for p in s.pieces}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for atts in idx.attachments.values():
        if len(atts) == 2:
            ra, rb = find(atts[0].piece), find(atts[1].piece)
            if ra != rb:
                parent[ra] = rb
    groups: dict[str, set[str]] = {}
    for p in s.pieces:
        groups.setdefault(find(p.id), set()).add(p.id)
    return sorted(groups.values(), key=lambda g: min(g))


def is_orientable(s: SurfaceComplex) -> bool:
    """Propagate a co-orientation over the adjacency graph.

    A piece may be used as written or flipped; gluing along an arc is
    coherent when the two boundary traversals run anti-parallel.
    """
    idx = index(s)
    flip: dict[str, int] = {}
    for comp in components(s):
        root = min(comp)
        flip[root] = 1
        stack = [root]
        while stack:
            pid = stack.pop()
            for d in idx.pieces[pid].word:
                atts = idx.attachments[d.arc]
                if len(atts) != 2:
                    continue
                a0, a1 = atts
                other = a1 if a0.piece == pid and a0.side == d.side else a0
                # For self-glued arcs both attachments sit on one piece.
                want = -a0.sign * a1.sign
                if a0.piece == a1.piece:
                    if want != 1:
                        return False
                    continue
                if other.piece in flip:
                    if flip[other.piece] != flip[pid] * want:
                        return False
                else:
                    flip[other.piece] = flip[pid] * want
                    stack.append(other.piece)
    return True


@dataclass(frozen=True)
class Census:
    intersection_count: int
    critical_counts: dict[int, int] = field(compare=False)  # n -> C_{2n}
    component_count: int = 0
    orientable: bool = True
    kind_counts: dict[str, int] = field(compare=False, default_factory=dict)

    def c(self, n: int) -> int:
        return self.critical_counts.get(n, 0)


def census(s: SurfaceComplex) -> Census:
    """Intersection count, critical piece counts C_{2n}, components, sidedness."""
    critical: dict[int, int] = {}
    kinds: dict[str, int] = {}
    for p in s.pieces:
        kinds[p.kind] = kinds.get(p.kind, 0) + 1
        if p.kind in (KIND_BOUNDARY, KIND_SADDLE):
            n = max(1, p.legs)
            critical[n] = critical.get(n, 0) + 1
    return Census(
        intersection_count=disk_intersection_count(s),
        critical_counts=critical,
        component_count=len(components(s)),
        orientable=is_orientable(s),
        kind_counts=kinds,
    )


def total_spine_crossings(s: SurfaceComplex) -> int:
    return sum(p.spine_crossings for p in s.pieces)


# ---------------------------------------------------------------------------
# Canonical layout of arcs on a disk
# ---------------------------------------------------------------------------


def disk_endpoint_order(s: SurfaceComplex, disk: str) -> list[tuple[str, int]]:
    """Cyclic order of arc endpoints on the disk boundary circle, side A view.

    Depth-first over the ordered nesting forest: an arc emits endpoint 0,
    then its children, then endpoint 1, so children sit inside the span of
    their parent.  The side B view is the reverse.
    """
    idx = index(s)
    out: list[tuple[str, int]] = []

    def emit(a: Arc) -> None:
        out.append((a.id, 0))
        for c in idx.children[a.id]:
            emit(c)
        out.append((a.id, 1))

    for r in idx.roots_on_disk.get(disk, []):
        emit(r)
    return out


def disk_faces(s: SurfaceComplex, disk: str) -> dict[tuple, list[str]]:
    """Faces of the disk cut along its arcs, keyed by span position.

    ('center',) is the face outside every root span; ('off', a) lies just
    inside the span of arc a, adjacent to a and its direct children.
    """
    idx = index(s)
    faces: dict[tuple, list[str]] = {("center",): [r.id for r in idx.roots_on_disk.get(disk, [])]}
    for a in idx.arcs_on_disk.get(disk, []):
        faces[("off", a.id)] = [a.id] + [c.id for c in idx.children[a.id]]
    return faces


def spine_span_chain(s: SurfaceComplex, disk: str) -> set[str]:
    """Arcs of the disk whose span contains the spine point."""
    key = s.spine_face(disk)
    if key == ("center",):
        return set()
    idx = index(s)
    chain = set()
    cur: str | None = key[1]
    while cur is not None:
        chain.add(cur)
        cur = idx.arcs[cur].parent
    return chain


def honest_parent(s: SurfaceComplex, arc_id: str) -> str | None:
    """Nearest span-ancestor that is a genuine annulus arc.

    Arcs pierced by the spine position (their span holds the spine point)
    cross the annulus in stubs and drop out of the inner-outer order.
    """
    idx = index(s)
    arc = idx.arcs[arc_id]
    if arc.disk is None:
        return None
    pierced = spine_span_chain(s, arc.disk)
    cur = arc.parent
    while cur is not None and cur in pierced:
        cur = idx.arcs[cur].parent
    return cur


def inner_outer(s: SurfaceComplex, outer: str, inner: str) -> bool:
    """The paper's inner-outer relation: span-nested, both true annulus arcs."""
    idx = index(s)
    a, b = idx.arcs[outer], idx.arcs[inner]
    if a.disk is None or a.disk != b.disk:
        return False
    pierced = spine_span_chain(s, a.disk)
    if outer in pierced or inner in pierced:
        return False
    cur = b.parent
    while cur is not None:
        if cur == outer:
            return True
        cur = idx.arcs[cur].parent
    return False


# ---------------------------------------------------------------------------
# Rebuilding helpers (complexes are immutable values)
# ---------------------------------------------------------------------------


def with_pieces_and_arcs(s: SurfaceComplex, arcs, pieces) -> SurfaceComplex:
    return replace(s, arcs=tuple(arcs), pieces=tuple(pieces))
