"""Example-family generators: the Qiu-style and Jaco-style corpora.

Both families live in the genus-2 handlebody with the separating disk D0
and the meridian disks D1, D2.  The common motif is a pair of mirror
saddles, one per ps-ball, each with a handle chain winding its meridian
disk and a bridge chain joining the two balls.  The level n winds the
handle 2n times, growing parallel arc families as in the inductive
standard-position pattern.

The Qiu layout keeps all arcs on a disk unnested, which leaves exactly one
bigon next to each saddle; the Jaco layout tucks the bridge arc inside an
arc of the handle chain, which kills every bigon.  The fig12 variants
replace the bridge: fig12a re-enters the far handle from its other side
(still incompressible), fig12b shortcuts both bridge legs straight across
the separating disk, which makes the surface compressible.

Figure-level data of the source constructions is not encoded anywhere;
the generators realize the stated census properties (one bigon per ball,
no bigons, mirror symmetry, n-independent verdicts) in the smallest
encodings that exhibit them.
"""

from __future__ import annotations

from .handlebody import build_handlebody
from .surface import Arc, DEdge, Piece, SurfaceComplex

HB2 = build_handlebody(2)

VARIANTS = ("original", "fig12a", "fig12b", "raw")


class FamilyError(ValueError):
    pass


def _d(arc: str, side: str, sign: int) -> DEdge:
    return DEdge(arc, side, sign)


def _handle_chain(prefix: str, disk: str, ball: str, n: int,
                  first_arc: str, last_arc: str):
    """Strip chain winding a meridian disk 2n times.

    Returns (pieces, chain arc ids): the chain runs first_arc, c1, ...,
    c_{2n-2}, last_arc through 2n-1 strips.
    """
    cs = [f"{prefix}c{j}" for j in range(1, 2 * n - 1)]
    route = [first_arc] + cs + [last_arc]
    pieces = []
    for j in range(len(route) - 1):
        a, b = route[j], route[j + 1]
        sign_in = 1 if j == 0 else -1
        pieces.append(Piece(f"{prefix}T{j + 1}", ball, "trivial",
                            (_d(a, "B", sign_in), _d(b, "A", 1))))
    return pieces, cs


def gen_qiu(n: int, variant: str = "original") -> SurfaceComplex:
    """The separating family Q_2n and its bridge variants."""
    if n < 1:
        raise FamilyError("qiu family needs n >= 1")
    if variant not in VARIANTS:
        raise FamilyError(f"unknown variant {variant!r}")
    if variant == "raw":
        return _qiu_raw(n)

    arcs: list[Arc] = []
    pieces: list[Piece] = []

    t1_pieces, cs = _handle_chain("P1", "D1", "P1", n, "p1", "p2")
    t2_pieces, ds = _handle_chain("P2", "D2", "P2", n, "q1", "q2")

    if variant == "fig12b":
        arcs += [Arc("p1", "D1")] + [Arc(c, "D1") for c in cs] + [Arc("p2", "D1")]
        arcs += [Arc("q1", "D2")] + [Arc(d, "D2") for d in ds] + [Arc("q2", "D2")]
        arcs += [Arc("u", "D0"), Arc("v", "D0")]
        pieces.append(Piece("A1", "P1", "saddle",
                            (_d("p1", "A", -1), _d("u", "A", 1),
                             _d("v", "A", 1), _d("p2", "B", -1)),
                            spine_crossings=1))
        pieces.append(Piece("A2", "P2", "saddle",
                            (_d("q1", "A", -1), _d("u", "B", -1),
                             _d("v", "B", -1), _d("q2", "B", -1)),
                            spine_crossings=1))
        pieces += t1_pieces + t2_pieces
        return SurfaceComplex(HB2, tuple(arcs), tuple(pieces))

    arcs += [Arc("s1", "D1"), Arc("p1", "D1")]
    arcs += [Arc(c, "D1") for c in cs] + [Arc("p2", "D1")]
    arcs += [Arc("t1", "D2"), Arc("q1", "D2")]
    arcs += [Arc(d, "D2") for d in ds] + [Arc("q2", "D2")]
    arcs += [Arc("u", "D0"), Arc("v", "D0")]

    pieces.append(Piece("A1", "P1", "saddle",
                        (_d("p1", "A", -1), _d("u", "A", 1),
                         _d("s1", "A", -1), _d("p2", "B", -1)),
                        spine_crossings=1))
    pieces += t1_pieces
    pieces.append(Piece("E1", "P1", "trivial", (_d("s1", "B", 1), _d("v", "A", 1))))
    pieces += t2_pieces
    if variant == "original":
        pieces.append(Piece("A2", "P2", "saddle",
                            (_d("q1", "A", -1), _d("u", "B", -1),
                             _d("t1", "A", -1), _d("q2", "B", -1)),
                            spine_crossings=1))
        pieces.append(Piece("E2", "P2", "trivial", (_d("t1", "B", 1), _d("v", "B", -1))))
    else:  # fig12a: the bridge re-enters the D2 handle from its far side
        pieces.append(Piece("A2", "P2", "saddle",
                            (_d("q1", "A", -1), _d("u", "B", -1),
                             _d("t1", "B", -1), _d("q2", "B", -1)),
                            spine_crossings=1))
        pieces.append(Piece("E2", "P2", "trivial", (_d("t1", "A", 1), _d("v", "B", -1))))
    return SurfaceComplex(HB2, tuple(arcs), tuple(pieces))


def _qiu_raw(n: int) -> SurfaceComplex:
    """Q_2n before reduction: one movable saddle per ball (Fig 10(a) stage)."""
    arcs: list[Arc] = []
    pieces: list[Piece] = []
    t1_pieces, cs = _handle_chain("P1", "D1", "P1", n, "p1", "p2")
    t2_pieces, ds = _handle_chain("P2", "D2", "P2", n, "q1", "q2")
    # The movable saddle holds the nested pair (g1 over g2); compressing it
    # splits off the first handle strip and the bridge strip and re-roots
    # the saddle across the disk, yielding the standard form.
    arcs += [Arc("g1", "D1"), Arc("g2", "D1", parent="g1")]
    arcs += [Arc(c, "D1") for c in cs] + [Arc("p2", "D1")]
    arcs += [Arc("h1", "D2"), Arc("h2", "D2", parent="h1")]
    arcs += [Arc(d, "D2") for d in ds] + [Arc("q2", "D2")]
    arcs += [Arc("u", "D0"), Arc("v", "D0")]
    mid1 = _d(cs[0], "A", 1) if n >= 2 else _d("p2", "A", 1)
    pieces.append(Piece("AR1", "P1", "saddle",
                        (_d("g1", "B", 1), mid1, _d("g2", "B", -1), _d("v", "A", 1)),
                        spine_crossings=1))
    pieces.append(Piece("W1o", "P1", "trivial", (_d("g1", "A", -1), _d("p2", "B", -1))))
    pieces.append(Piece("W1i", "P1", "trivial", (_d("g2", "A", 1), _d("u", "A", 1))))
    mid2 = _d(ds[0], "A", 1) if n >= 2 else _d("q2", "A", 1)
    pieces.append(Piece("AR2", "P2", "saddle",
                        (_d("h1", "B", 1), mid2, _d("h2", "B", -1), _d("v", "B", -1)),
                        spine_crossings=1))
    pieces.append(Piece("W2o", "P2", "trivial", (_d("h1", "A", -1), _d("q2", "B", -1))))
    pieces.append(Piece("W2i", "P2", "trivial", (_d("h2", "A", 1), _d("u", "B", -1))))
    # The handle chains beyond their first strips are already in place.
    pieces += t1_pieces[1:]
    pieces += t2_pieces[1:]
    return SurfaceComplex(HB2, tuple(arcs), tuple(pieces))


def gen_jaco(n: int) -> SurfaceComplex:
    """The non-separating family J_n: the Qiu motif with shielded bridges.

    Identical piece structure, but on each meridian disk the bridge arc
    nests inside the last handle arc, so no saddle pair cobounds a disk
    face and no ps-ball carries a bigon.
    """
    if n < 1:
        raise FamilyError("jaco family needs n >= 1")
    s = gen_qiu(n, "original")
    relocated = []
    for a in s.arcs:
        if a.id == "s1":
            relocated.append(Arc("s1", "D1", parent="p2"))
        elif a.id == "t1":
            relocated.append(Arc("t1", "D2", parent="q2"))
        else:
            relocated.append(a)
    # Nested arcs must sit inside their parent's span: keep document order
    # with the parent first.
    order = {a.id: i for i, a in enumerate(relocated)}

    def sort_key(a: Arc):
        if a.id == "s1":
            return (order["p2"], 1)
        if a.id == "t1":
            return (order["q2"], 1)
        return (order[a.id], 0)

    relocated.sort(key=sort_key)
    return SurfaceComplex(s.handlebody, tuple(relocated), s.pieces)


def boundary_collar() -> SurfaceComplex:
    """A boundary-parallel annulus over a loop crossing D1 once."""
    arcs = (Arc("m", "D1"),)
    pieces = (Piece("R", "P1", "trivial", (_d("m", "A", 1), _d("m", "B", -1))),)
    return SurfaceComplex(HB2, arcs, pieces)


def boundary_collar_cycle() -> SurfaceComplex:
    """The collar pushed off the disk system: an in-ball annulus.

    Its retract graph keeps a cycle inside P1 after cutting, so the
    triviality test fires.
    """
    arcs = (Arc("i", None, ball="P1"),)
    pieces = (Piece("R", "P1", "trivial", (_d("i", "A", 1), _d("i", "B", -1))),)
    return SurfaceComplex(HB2, arcs, pieces)


def corpus(max_n: int = 4) -> dict[str, SurfaceComplex]:
    """Every corpus surface keyed by name; used by tests and the batch CLI."""
    out: dict[str, SurfaceComplex] = {}
    for n in range(1, max_n + 1):
        out[f"qiu{2 * n}"] = gen_qiu(n, "original")
        out[f"jaco{n}"] = gen_jaco(n)
    for n in (2, 3):
        out[f"qiu{2 * n}a"] = gen_qiu(n, "fig12a")
        out[f"qiu{2 * n}b"] = gen_qiu(n, "fig12b")
    out["collar"] = boundary_collar()
    out["collar-cycle"] = boundary_collar_cycle()
    return out
