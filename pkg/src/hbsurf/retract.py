"""The retract graph of a surface complex and its triviality test.

The surface deformation retracts onto a graph: every critical piece becomes
a vertex (valence = leg count), every trivial strip an edge segment, with
maximal strip chains concatenated into single edges.  Each edge records the
disks it crosses, in order, together with the ps-ball of every segment
between crossings.  Cutting at the crossings yields the per-ball subgraphs
whose cycles witness compressibility.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .surface import KIND_TRIVIAL, SurfaceComplex, index


@dataclass(frozen=True)
class GraphEdge:
    """One edge of the retract graph.

    ``u``/``v`` name vertices, or None for a free end (pendant).  A closed
    strip chain with no critical vertex has u == v == None and is a circle.
    ``crossings`` lists the disks met along the edge; ``segment_balls`` has
    one entry per stretch between consecutive crossings (len(crossings)+1
    entries, or len(crossings) for a circle).
    """

    id: str
    u: str | None
    v: str | None
    crossings: tuple[str, ...]
    segment_balls: tuple[str, ...]

    @property
    def is_circle(self) -> bool:
        return self.u is None and self.v is None


@dataclass(frozen=True)
class RetractGraph:
    vertices: tuple[tuple[str, int, str], ...]  # (id, valence, ball)
    edges: tuple[GraphEdge, ...]

    def vertex_ids(self) -> list[str]:
        return [v[0] for v in self.vertices]


def build_graph(s: SurfaceComplex) -> RetractGraph:
    """Retract the complex: critical pieces to vertices, strip chains to edges."""
    idx = index(s)
    vertices = []
    for p in sorted(s.pieces, key=lambda p: p.id):
        if p.kind != KIND_TRIVIAL:
            vertices.append((p.id, p.legs, p.ball))
    vertex_ids = {v[0] for v in vertices}

    # Ends to pair up: (piece, word position).  Walk from each critical leg
    # through trivial strips until another critical leg or a dead end.
    consumed: set[tuple[str, int]] = set()
    edges: list[GraphEdge] = []

    def step_across(arc_id: str, side: str):
        """Cross an arc: returns (piece, pos) on the far side, or None."""
        try:
            att = idx.other_attachment(arc_id, side)
        except KeyError:
            return None
        return att.piece, att.pos

    def walk(start_piece: str, start_pos: int):
        """Follow strips from one critical leg.

        Returns (end leg or None, disk crossings, one ball per segment
        between consecutive crossings).
        """
        crossings: list[str] = []
        seg_balls: list[str] = [idx.pieces[start_piece].ball]
        d = idx.pieces[start_piece].word[start_pos]
        arc = idx.arcs[d.arc]
        crossed = arc.disk is not None
        if crossed:
            crossings.append(arc.disk)
        here = step_across(d.arc, d.side)
        while True:
            if here is None:
                if crossed:
                    seg_balls.append(seg_balls[-1])
                return None, crossings, seg_balls
            pid, pos = here
            piece = idx.pieces[pid]
            if crossed:
                seg_balls.append(piece.ball)
            if pid in vertex_ids:
                return (pid, pos), crossings, seg_balls
            if piece.legs != 2:
                return None, crossings, seg_balls
            out_pos = 1 - pos
            consumed.add((pid, pos))
            consumed.add((pid, out_pos))
            d = piece.word[out_pos]
            arc = idx.arcs[d.arc]
            crossed = arc.disk is not None
            if crossed:
                crossings.append(arc.disk)
            here = step_across(d.arc, d.side)

    n_edges = 0
    seen_leg: set[tuple[str, int]] = set()
    for vid, _val, _ball in vertices:
        p = idx.pieces[vid]
        for pos in range(p.legs):
            if (vid, pos) in seen_leg:
                continue
            seen_leg.add((vid, pos))
            end, crossings, balls = walk(vid, pos)
            if end is not None:
                seen_leg.add(end)
                v_end = end[0]
            else:
                v_end = None
            edges.append(GraphEdge(f"e{n_edges}", vid, v_end,
                                   tuple(crossings), tuple(balls)))
            n_edges += 1

    # Remaining strips form closed circles of trivial pieces.
    for p in sorted(s.pieces, key=lambda p: p.id):
        if p.kind != KIND_TRIVIAL or (p.id, 0) in consumed:
            continue
        crossings: list[str] = []
        seg_balls: list[str] = []
        pid, pos = p.id, 0
        while (pid, pos) not in consumed:
            consumed.add((pid, pos))
            consumed.add((pid, 1 - pos))
            piece = idx.pieces[pid]
            d = piece.word[1 - pos]
            arc = idx.arcs[d.arc]
            if arc.disk is not None:
                crossings.append(arc.disk)
                seg_balls.append(piece.ball)
            nxt = step_across(d.arc, d.side)
            if nxt is None:
                break
            pid, pos = nxt
        if not seg_balls:
            seg_balls = [idx.pieces[p.id].ball]
        edges.append(GraphEdge(f"e{n_edges}", None, None,
                               tuple(crossings), tuple(seg_balls)))
        n_edges += 1

    return RetractGraph(tuple(vertices), tuple(edges))


def betti_number(g: RetractGraph) -> int:
    """First Betti number of the (uncut) retract graph."""
    node_ids = set(v[0] for v in g.vertices)
    parent = {n: n for n in node_ids}
    extra = 0
    e_count = 0

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    cycles = 0
    for e in g.edges:
        if e.is_circle:
            cycles += 1
            continue
        e_count += 1
        if e.u is None or e.v is None:
            # Pendant end: contributes a vertex, never a cycle.
            continue
        ru, rv = find(e.u), find(e.v)
        if ru == rv:
            cycles += 1
        else:
            parent[ru] = rv
    # For a graph, b1 = E - V + C; the incremental count above equals it.
    _ = e_count
    return cycles


@dataclass(frozen=True)
class CutFragment:
    """A piece of an edge after severing at every disk crossing."""

    edge: str
    seg: int
    ball: str
    u: str | None  # vertex id, or None for a cut/pendant end
    v: str | None
    closed: bool = False  # an uncut circle


def cut_components(g: RetractGraph) -> dict[str, list[list[CutFragment]]]:
    """Sever every disk crossing; group the fragments per ps-ball.

    Fragments joined at a shared critical vertex stay together; all disk
    crossings become free ends.  A circle edge with no crossings survives as
    a closed fragment (a cycle).
    """
    fragments: list[CutFragment] = []
    for e in g.edges:
        k = len(e.crossings)
        if e.is_circle:
            if k == 0:
                fragments.append(CutFragment(e.id, 0, e.segment_balls[0], None, None, True))
            else:
                for i in range(k):
                    fragments.append(CutFragment(e.id, i, e.segment_balls[i], None, None))
            continue
        for i in range(k + 1):
            u = e.u if i == 0 else None
            v = e.v if i == k else None
            fragments.append(CutFragment(e.id, i, e.segment_balls[i], u, v))
    by_ball: dict[str, list[CutFragment]] = {}
    for f in fragments:
        by_ball.setdefault(f.ball, []).append(f)
    out: dict[str, list[list[CutFragment]]] = {}
    for ball, frs in sorted(by_ball.items()):
        parent: dict = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, f in enumerate(frs):
            parent[("f", i)] = ("f", i)
            for end in (f.u, f.v):
                if end is not None:
                    parent.setdefault(("v", end), ("v", end))
        for i, f in enumerate(frs):
            for end in (f.u, f.v):
                if end is not None:
                    ra, rb = find(("f", i)), find(("v", end))
                    if ra != rb:
                        parent[ra] = rb
        groups: dict = {}
        for i in range(len(frs)):
            groups.setdefault(find(("f", i)), []).append(frs[i])
        out[ball] = sorted(groups.values(), key=lambda fr: (fr[0].edge, fr[0].seg))
    return out


def fragment_count(g: RetractGraph) -> int:
    return sum(len(frs) for comps in cut_components(g).values() for frs in comps)


def expected_fragment_count(g: RetractGraph) -> int:
    total = 0
    for e in g.edges:
        k = len(e.crossings)
        if e.is_circle:
            total += max(k, 1)
        else:
            total += k + 1
    return total


def is_trivial(g: RetractGraph) -> tuple[bool, list[CutFragment] | None]:
    """True when some per-ball component of the cut graph contains a cycle.

    Returns the witness component when one exists.  A cycle needs either an
    uncut circle or more fragments than distinct vertices in a component.
    """
    for _ball, comps in cut_components(g).items():
        for comp in comps:
            if any(f.closed for f in comp):
                return True, comp
            verts = set()
            attach = 0
            for f in comp:
                for end in (f.u, f.v):
                    if end is not None:
                        verts.add(end)
                        attach += 1
            # Component is a graph with len(comp) edges and |verts| real
            # vertices plus one leaf per free end; free ends never close
            # cycles, so b1 = attachments - (edges + verts) + components = 0
            # exactly for forests.
            if verts and attach - len(comp) - len(verts) + 1 > 0:
                return True, comp
    return False, None


def export_edge_list(g: RetractGraph) -> str:
    """Plain-text edge list: one line per edge, crossings annotated."""
    lines = []
    for v, val, ball in g.vertices:
        lines.append(f"vertex {v} valence={val} ball={ball}")
    for e in g.edges:
        u = e.u if e.u is not None else "-"
        v = e.v if e.v is not None else "-"
        cr = ",".join(e.crossings) if e.crossings else "-"
        lines.append(f"edge {e.id} {u} {v} crossings={cr}")
    return "\n".join(lines) + "\n"
