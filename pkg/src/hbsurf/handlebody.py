"""Genus-g handlebody skeleton: spine graph, disk system, pant-shaped balls.

The handlebody V of genus g >= 2 is modelled by its 3-valent spine (2g-2
vertices, 3g-3 edges) together with the maximal essential disk system that
assigns one disk to every spine edge.  Cutting V along the disks yields one
pant-shaped ball (ps-ball) per spine vertex; each ball shows three annulus
slots, one for every incident disk side.
"""

from __future__ import annotations

from dataclasses import dataclass, field

SIDE_A = "A"
SIDE_B = "B"
SIDES = (SIDE_A, SIDE_B)


class HandlebodyError(ValueError):
    """Raised for malformed spines, disk systems or ball assignments."""


@dataclass(frozen=True)
class SpineEdge:
    id: str
    u: str
    v: str

    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True)
class SpineGraph:
    """3-valent spine of a genus-g handlebody."""

    genus: int
    vertices: tuple[str, ...]
    edges: tuple[SpineEdge, ...]
    spanning_tree: frozenset[str]

    def edge(self, edge_id: str) -> SpineEdge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise HandlebodyError(f"unknown spine edge {edge_id!r}")

    def generator_edges(self) -> tuple[str, ...]:
        """Edges outside the spanning tree; one free generator of pi1(V) each."""
        return tuple(e.id for e in self.edges if e.id not in self.spanning_tree)


@dataclass(frozen=True, order=True)
class DiskSide:
    """One side of a disk in the system, bound to a single annulus slot."""

    disk: str
    side: str

    def opposite(self) -> "DiskSide":
        return DiskSide(self.disk, SIDE_B if self.side == SIDE_A else SIDE_A)


@dataclass(frozen=True)
class PsBall:
    id: str
    spine_vertex: str
    slots: tuple[DiskSide, DiskSide, DiskSide]


@dataclass(frozen=True)
class Handlebody:
    """Spine plus disk system plus ps-balls, cross-linked and validated."""

    spine: SpineGraph
    balls: tuple[PsBall, ...]
    side_to_ball: dict[DiskSide, str] = field(compare=False)

    def ball(self, ball_id: str) -> PsBall:
        for b in self.balls:
            if b.id == ball_id:
                return b
        raise HandlebodyError(f"unknown ps-ball {ball_id!r}")

    def ball_of_side(self, side: DiskSide) -> str:
        try:
            return self.side_to_ball[side]
        except KeyError:
            raise HandlebodyError(f"unbound disk side {side}") from None

    @property
    def disk_ids(self) -> tuple[str, ...]:
        return tuple(e.id for e in self.spine.edges)


def check_spine(spine: SpineGraph) -> None:
    """Validate the SpineGraph invariants; raise HandlebodyError on failure."""
    g = spine.genus
    if g < 2:
        raise HandlebodyError("genus must be at least 2")
    if len(spine.vertices) != 2 * g - 2:
        raise HandlebodyError(f"expected {2 * g - 2} spine vertices, got {len(spine.vertices)}")
    if len(spine.edges) != 3 * g - 3:
        raise HandlebodyError(f"expected {3 * g - 3} spine edges, got {len(spine.edges)}")
    ids = [e.id for e in spine.edges]
    if len(set(ids)) != len(ids):
        raise HandlebodyError("duplicate spine edge ids")
    degree = {v: 0 for v in spine.vertices}
    for e in spine.edges:
        for end in (e.u, e.v):
            if end not in degree:
                raise HandlebodyError(f"edge {e.id} touches unknown vertex {end!r}")
        degree[e.u] += 1
        degree[e.v] += 1
    bad = [v for v, d in degree.items() if d != 3]
    if bad:
        raise HandlebodyError(f"spine vertices of degree != 3: {bad}")
    # Spanning tree: acyclic, connected, 2g-3 edges, no loops.
    tree = [spine.edge(t) for t in sorted(spine.spanning_tree)]
    if len(tree) != 2 * g - 3:
        raise HandlebodyError(f"spanning tree must have {2 * g - 3} edges")
    parent: dict[str, str] = {v: v for v in spine.vertices}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in tree:
        ru, rv = find(e.u), find(e.v)
        if ru == rv:
            raise HandlebodyError("spanning tree contains a cycle")
        parent[ru] = rv
    roots = {find(v) for v in spine.vertices}
    if len(roots) != 1:
        raise HandlebodyError("spanning tree does not connect the spine")


def build_spine(genus: int) -> SpineGraph:
    """Canonical linear spine for the given genus.

    Genus 2 is the dumbbell used by the example corpus: a loop D1 at P1, a
    loop D2 at P2 and the separating bridge D0 between them.  Higher genus
    extends the dumbbell into a chain of theta-like blocks: a path of
    vertices carrying the two end loops, with every second chain edge
    doubled so interior vertices stay 3-valent.
    """
    if genus < 2:
        raise HandlebodyError("genus must be at least 2")
    n = 2 * genus - 2
    vertices = tuple(f"P{i}" for i in range(1, n + 1))
    edges: list[SpineEdge] = []
    tree: list[str] = []
    if genus == 2:
        edges.append(SpineEdge("D0", "P1", "P2"))
        edges.append(SpineEdge("D1", "P1", "P1"))
        edges.append(SpineEdge("D2", "P2", "P2"))
        tree.append("D0")
    else:
        k = 0
        for i in range(1, n):
            e = SpineEdge(f"D{k}", f"P{i}", f"P{i+1}")
            edges.append(e)
            tree.append(e.id)
            k += 1
        edges.append(SpineEdge(f"D{k}", "P1", "P1"))
        k += 1
        edges.append(SpineEdge(f"D{k}", f"P{n}", f"P{n}"))
        k += 1
        # Double every second interior chain edge to reach valence 3.
        for i in range(2, n - 1, 2):
            edges.append(SpineEdge(f"D{k}", f"P{i}", f"P{i+1}"))
            k += 1
    spine = SpineGraph(genus, vertices, tuple(edges), frozenset(tree))
    check_spine(spine)
    return spine


def ps_balls(spine: SpineGraph) -> Handlebody:
    """Cut along the disk system: one ps-ball per spine vertex.

    Slot order within a ball is the sorted order of incident (disk, side)
    pairs, with side A of an edge living at its u vertex.  Every disk side
    is consumed exactly once.
    """
    check_spine(spine)
    incident: dict[str, list[DiskSide]] = {v: [] for v in spine.vertices}
    for e in spine.edges:
        incident[e.u].append(DiskSide(e.id, SIDE_A))
        incident[e.v].append(DiskSide(e.id, SIDE_B))
    balls = []
    side_to_ball: dict[DiskSide, str] = {}
    for i, v in enumerate(spine.vertices, start=1):
        slots = tuple(sorted(incident[v], key=lambda s: (s.disk, s.side)))
        if len(slots) != 3:
            raise HandlebodyError(f"vertex {v} has {len(slots)} slots")
        ball = PsBall(f"P{i}", v, slots)  # type: ignore[arg-type]
        balls.append(ball)
        for s in slots:
            if s in side_to_ball:
                raise HandlebodyError(f"disk side {s} consumed twice")
            side_to_ball[s] = ball.id
    hb = Handlebody(spine, tuple(balls), side_to_ball)
    audit_handlebody(hb)
    return hb


def audit_handlebody(hb: Handlebody) -> None:
    """Construction audit: counts and the side/slot bijection."""
    g = hb.spine.genus
    if len(hb.balls) != 2 * g - 2:
        raise HandlebodyError("wrong ps-ball count")
    all_sides = {DiskSide(e.id, s) for e in hb.spine.edges for s in SIDES}
    bound = set(hb.side_to_ball)
    if bound != all_sides:
        raise HandlebodyError("disk side / slot assignment is not a bijection")
    if sum(len(b.slots) for b in hb.balls) != 6 * g - 6:
        raise HandlebodyError("wrong slot count")


def cycle_rank(spine: SpineGraph) -> int:
    """First Betti number of the spine; equals the genus for one component."""
    return len(spine.edges) - len(spine.vertices) + 1


def build_handlebody(genus: int) -> Handlebody:
    return ps_balls(build_spine(genus))
