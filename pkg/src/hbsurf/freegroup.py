"""Free-group oracle: surface loops, their images in pi1(V), Stallings folding.

pi1 of the handlebody is free on one generator per spine edge outside the
spanning tree.  A loop of the surface maps to the word spelled by its disk
crossings (tree-edge disks and internal arcs contribute nothing).  For a
connected 2-sided surface with boundary, the inclusion is pi1-injective iff
the folded rank of the loop words equals the rank of pi1(S); that decides
incompressibility independently of the main algorithm.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .handlebody import SIDE_A, Handlebody
from .surface import SurfaceComplex, components, euler_characteristic, index, is_orientable

Letter = tuple[str, int]  # (generator name, +1 or -1)


def reduce_word(letters) -> tuple[Letter, ...]:
    """Freely reduce: cancel adjacent inverse pairs."""
    out: list[Letter] = []
    for g, s in letters:
        if out and out[-1][0] == g and out[-1][1] == -s:
            out.pop()
        else:
            out.append((g, s))
    return tuple(out)


@dataclass(frozen=True)
class FreeWord:
    letters: tuple[Letter, ...]

    @staticmethod
    def make(letters) -> "FreeWord":
        return FreeWord(reduce_word(letters))

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((g, -s) for g, s in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters


def spell(word: FreeWord, generators: list[str]) -> str:
    """Render in the a1..ag alphabet, capitals for inverses."""
    if not word.letters:
        return "1"
    names = {g: f"a{i + 1}" for i, g in enumerate(generators)}
    out = []
    for g, s in word.letters:
        t = names[g]
        out.append(t if s > 0 else t.upper())
    return " ".join(out)


class OracleError(ValueError):
    pass


Loop = tuple[tuple[str, int], ...]  # sequence of (arc id, direction A->B = +1)


def surface_loops(s: SurfaceComplex) -> list[Loop]:
    """A free basis of pi1(S): one loop per non-tree arc of the adjacency graph.

    Requires S connected with boundary.  Loops are returned as crossing
    sequences (arc, direction); the spanning tree is over pieces.
    """
    comps = components(s)
    if len(comps) != 1:
        raise OracleError("surface is not connected")
    if euler_characteristic(s) > 1:
        raise OracleError("not a surface with boundary")
    idx = index(s)
    root = min(p.id for p in s.pieces)
    # Tree paths: piece -> (parent piece, arc, direction walking child->parent).
    parent: dict[str, tuple[str, str, int] | None] = {root: None}
    order = [root]
    tree_arcs: set[str] = set()
    frontier = [root]
    while frontier:
        pid = frontier.pop()
        for d in idx.pieces[pid].word:
            atts = idx.attachments[d.arc]
            if len(atts) != 2:
                continue
            a0, a1 = atts
            other = a1 if (a0.piece == pid and a0.side == d.side) else a0
            if other.piece in parent or a0.piece == a1.piece:
                continue
            # Direction A->B is +1; walking pid -> other crosses d.arc
            # from pid's side.
            direction = 1 if d.side == SIDE_A else -1
            parent[other.piece] = (pid, d.arc, -direction)
            tree_arcs.add(d.arc)
            order.append(other.piece)
            frontier.append(other.piece)

    def path_to_root(pid: str) -> list[tuple[str, int]]:
        out = []
        while parent[pid] is not None:
            up, arc, direction = parent[pid]
            out.append((arc, direction))
            pid = up
        return out

    loops: list[Loop] = []
    for a in s.arcs:
        if a.id in tree_arcs:
            continue
        a0 = idx.attachment(a.id, SIDE_A)
        b0 = idx.attachment(a.id, "B")
        # Loop: root -> a0.piece, cross arc A->B, b0.piece -> root.
        down = list(reversed([(arc, -d) for arc, d in path_to_root(a0.piece)]))
        up = path_to_root(b0.piece)
        loops.append(tuple(down + [(a.id, 1)] + up))
    assert len(loops) == len(s.arcs) - len(s.pieces) + 1
    return loops


def loop_word(loop: Loop, s: SurfaceComplex) -> FreeWord:
    """Spell the pi1(V) image: each generator-disk crossing contributes a letter."""
    idx = index(s)
    gens = set(s.handlebody.spine.generator_edges())
    letters: list[Letter] = []
    for arc_id, direction in loop:
        arc = idx.arcs[arc_id]
        if arc.disk is not None and arc.disk in gens:
            letters.append((arc.disk, direction))
    return FreeWord.make(letters)


def loop_words(s: SurfaceComplex) -> list[FreeWord]:
    return [loop_word(lp, s) for lp in surface_loops(s)]


# ---------------------------------------------------------------------------
# Stallings folding
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FoldedGraph:
    """Rooted labeled graph with no two equal-label germs at a vertex."""

    base: int
    edges: tuple[tuple[int, str, int], ...]  # (u, generator, v), positive direction

    def vertex_count(self) -> int:
        verts = {self.base}
        for u, _g, v in self.edges:
            verts.add(u)
            verts.add(v)
        return len(verts)

    def rank(self) -> int:
        if not self.edges:
            return 0
        return len(self.edges) - self.vertex_count() + 1


def fold(words: list[FreeWord], order_seed: int | None = None) -> FoldedGraph:
    """Wedge the words at a base vertex and fold to a fixed point.

    Folding identifies the far endpoints of two equal-label edges leaving
    (or entering) one vertex; the result is order-independent.
    """
    edges: list[tuple[int, str, int]] = []
    fresh = 0
    items = list(words)
    if order_seed is not None:
        random.Random(order_seed).shuffle(items)
    for w in items:
        cur = 0
        n = len(w.letters)
        for i, (g, sgn) in enumerate(w.letters):
            if i == n - 1:
                nxt = 0
            else:
                fresh += 1
                nxt = fresh
            edges.append((cur, g, nxt) if sgn > 0 else (nxt, g, cur))
            cur = nxt

    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    while True:
        eset = sorted({(find(u), g, find(v)) for u, g, v in edges})
        out: dict[tuple[int, str], int] = {}
        inn: dict[tuple[int, str], int] = {}
        merge = None
        for u, g, v in eset:
            if out.get((u, g), v) != v:
                merge = (out[(u, g)], v)
                break
            out[(u, g)] = v
            if inn.get((v, g), u) != u:
                merge = (inn[(v, g)], u)
                break
            inn[(v, g)] = u
        if merge is None:
            edges = eset
            break
        ra, rb = find(merge[0]), find(merge[1])
        if ra != rb:
            parent[ra] = rb
    verts = sorted({find(0)} | {x for u, _g, v in edges for x in (u, v)})
    number = {v: i for i, v in enumerate(verts)}
    return FoldedGraph(number[find(0)],
                       tuple(sorted((number[u], g, number[v]) for u, g, v in edges)))


def folded_rank(words: list[FreeWord], order_seed: int | None = None) -> int:
    return fold(words, order_seed).rank()


def is_injective(words: list[FreeWord], n: int) -> bool:
    """F_n -> F_g injective iff folding the images keeps rank n (Hopfian)."""
    return folded_rank(words) == n


@dataclass(frozen=True)
class OracleReport:
    rank_expected: int
    rank_folded: int
    injective: bool
    words: tuple[FreeWord, ...]


def oracle_report(s: SurfaceComplex) -> OracleReport:
    """Run the full oracle on a connected 2-sided surface with boundary."""
    if not is_orientable(s):
        raise OracleError("oracle restricted to 2-sided surfaces")
    words = loop_words(s)
    n = len(words)
    r = folded_rank(words)
    return OracleReport(n, r, r == n, tuple(words))


def export_words(s: SurfaceComplex, hb: Handlebody | None = None) -> str:
    gens = list((hb or s.handlebody).spine.generator_edges())
    return "\n".join(spell(w, gens) for w in loop_words(s)) + "\n"
