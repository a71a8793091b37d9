"""Surface document format: line-oriented text with a JSON mirror.

Grammar (one directive per line, ``#`` comments and blank lines ignored)::

    surface-format 1
    genus <g>
    spine canonical
    spine vertices <v1> <v2> ...          # alternative: explicit spine
    spine edge <id> <u> <v>
    spine tree <id>[,<id>...]
    arc <id> <disk> <parent|->            # nesting parent, '-' for a root
    arc <id> @<ball>                      # internal arc inside one ps-ball
    piece <id> <ball> <kind> <spine_crossings> <word>

A boundary word alternates arc tokens ``arc:side:dir`` (side A or B,
dir + or -) with ``.`` marking the boundary edge between them; it must end
with ``.`` so D-edges and B-edges strictly alternate.  A cap piece with no
D-edges has the word ``.`` alone.  Arc order in the document is the layout
order on each disk (sibling order of the nesting forest), so parse and
serialize round-trip exactly.
"""

from __future__ import annotations

import json

from .handlebody import Handlebody, SpineEdge, SpineGraph, build_handlebody, ps_balls
from .surface import KINDS, Arc, DEdge, Piece, SurfaceComplex

FORMAT_VERSION = 1


class DocumentError(ValueError):
    def __init__(self, errors: list[str]):
        super().__init__("; ".join(errors))
        self.errors = errors


def _parse_word(tokens: list[str], where: str, errors: list[str]) -> tuple[DEdge, ...]:
    if tokens == ["."]:
        return ()
    word: list[DEdge] = []
    expect_arc = True
    for tok in tokens:
        if tok == ".":
            if expect_arc:
                errors.append(f"{where}: two consecutive B-edges in boundary word")
                return ()
            expect_arc = True
            continue
        if not expect_arc:
            errors.append(f"{where}: two consecutive D-edges in boundary word")
            return ()
        parts = tok.split(":")
        if len(parts) != 3 or parts[1] not in ("A", "B") or parts[2] not in ("+", "-"):
            errors.append(f"{where}: bad arc token {tok!r}")
            return ()
        word.append(DEdge(parts[0], parts[1], 1 if parts[2] == "+" else -1))
        expect_arc = False
    if not expect_arc:
        errors.append(f"{where}: boundary word must end with a B-edge")
        return ()
    return tuple(word)


def parse_surface(text: str) -> SurfaceComplex:
    """Parse a surface document; raises DocumentError listing schema errors."""
    errors: list[str] = []
    genus: int | None = None
    spine_mode: str | None = None
    vertices: list[str] = []
    edges: list[SpineEdge] = []
    tree: list[str] = []
    arcs: list[Arc] = []
    pieces: list[Piece] = []
    spine_faces: list[tuple] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"line {lineno}"
        parts = line.split()
        head = parts[0]
        if head == "surface-format":
            if len(parts) != 2 or parts[1] != str(FORMAT_VERSION):
                errors.append(f"{where}: unsupported format version")
        elif head == "genus":
            try:
                genus = int(parts[1])
            except (IndexError, ValueError):
                errors.append(f"{where}: bad genus")
        elif head == "spine":
            if len(parts) >= 2 and parts[1] == "canonical":
                spine_mode = "canonical"
            elif len(parts) >= 2 and parts[1] == "vertices":
                spine_mode = "explicit"
                vertices = parts[2:]
            elif len(parts) >= 2 and parts[1] == "edge":
                if len(parts) != 5:
                    errors.append(f"{where}: spine edge needs id u v")
                else:
                    edges.append(SpineEdge(parts[2], parts[3], parts[4]))
            elif len(parts) >= 2 and parts[1] == "tree":
                tree = parts[2].split(",") if len(parts) > 2 else []
            else:
                errors.append(f"{where}: bad spine directive")
        elif head == "spineface":
            if len(parts) != 3:
                errors.append(f"{where}: spineface needs disk and face")
            elif parts[2] == "center":
                spine_faces.append((parts[1], ("center",)))
            elif parts[2].startswith("off:"):
                spine_faces.append((parts[1], ("off", parts[2][4:])))
            else:
                errors.append(f"{where}: bad spine face {parts[2]!r}")
        elif head == "arc":
            if len(parts) < 3:
                errors.append(f"{where}: arc needs id and disk")
                continue
            aid = parts[1]
            if parts[2].startswith("@"):
                arcs.append(Arc(aid, None, ball=parts[2][1:]))
            else:
                parent = None if len(parts) < 4 or parts[3] == "-" else parts[3]
                arcs.append(Arc(aid, parts[2], parent=parent))
        elif head == "piece":
            if len(parts) < 6:
                errors.append(f"{where}: piece needs id ball kind sc word")
                continue
            pid, ball, kind, sc_text = parts[1], parts[2], parts[3], parts[4]
            if kind not in KINDS:
                errors.append(f"{where}: unknown piece kind {kind!r}")
                continue
            try:
                sc = int(sc_text)
            except ValueError:
                errors.append(f"{where}: bad spine crossing count")
                continue
            word = _parse_word(parts[5:], where, errors)
            pieces.append(Piece(pid, ball, kind, word, spine_crossings=sc))
        else:
            errors.append(f"{where}: unknown directive {head!r}")

    if genus is None:
        errors.append("document: missing genus")
    if not pieces and not errors:
        errors.append("document: empty surface")
    if errors:
        raise DocumentError(errors)

    if spine_mode == "explicit" or edges:
        spine = SpineGraph(genus, tuple(vertices), tuple(edges), frozenset(tree))
        hb = ps_balls(spine)
    else:
        hb = build_handlebody(genus)
    s = SurfaceComplex(hb, tuple(arcs), tuple(pieces), tuple(spine_faces))
    # Referential problems are schema errors at parse level.
    known = {a.id for a in arcs}
    for p in pieces:
        for d in p.word:
            if d.arc not in known:
                errors.append(f"piece {p.id}: dangling arc reference {d.arc!r}")
    for a in arcs:
        if a.parent is not None and a.parent not in known:
            errors.append(f"arc {a.id}: dangling nesting parent {a.parent!r}")
    if errors:
        raise DocumentError(errors)
    return s


def serialize_surface(s: SurfaceComplex) -> str:
    """Canonical text form; parse(serialize(s)) reproduces s exactly."""
    hb = s.handlebody
    lines = [f"surface-format {FORMAT_VERSION}", f"genus {hb.spine.genus}"]
    canonical = False
    try:
        canonical = build_handlebody(hb.spine.genus).spine == hb.spine
    except Exception:
        canonical = False
    if canonical:
        lines.append("spine canonical")
    else:
        lines.append("spine vertices " + " ".join(hb.spine.vertices))
        for e in hb.spine.edges:
            lines.append(f"spine edge {e.id} {e.u} {e.v}")
        lines.append("spine tree " + ",".join(sorted(hb.spine.spanning_tree)))
    for disk, key in s.spine_faces:
        face = "center" if key == ("center",) else f"off:{key[1]}"
        lines.append(f"spineface {disk} {face}")
    for a in s.arcs:
        if a.internal:
            lines.append(f"arc {a.id} @{a.ball}")
        else:
            lines.append(f"arc {a.id} {a.disk} {a.parent or '-'}")
    for p in s.pieces:
        toks: list[str] = []
        for d in p.word:
            toks.append(f"{d.arc}:{d.side}:{'+' if d.sign > 0 else '-'}")
            toks.append(".")
        if not toks:
            toks = ["."]
        lines.append(f"piece {p.id} {p.ball} {p.kind} {p.spine_crossings} " + " ".join(toks))
    return "\n".join(lines) + "\n"


def to_json(s: SurfaceComplex) -> str:
    hb = s.handlebody
    doc = {
        "format": FORMAT_VERSION,
        "genus": hb.spine.genus,
        "spine": {
            "vertices": list(hb.spine.vertices),
            "edges": [[e.id, e.u, e.v] for e in hb.spine.edges],
            "tree": sorted(hb.spine.spanning_tree),
        },
        "spine_faces": [[d, list(k)] for d, k in s.spine_faces],
        "arcs": [
            {"id": a.id, "disk": a.disk, "parent": a.parent, "ball": a.ball}
            for a in s.arcs
        ],
        "pieces": [
            {
                "id": p.id,
                "ball": p.ball,
                "kind": p.kind,
                "spine_crossings": p.spine_crossings,
                "word": [[d.arc, d.side, d.sign] for d in p.word],
            }
            for p in s.pieces
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def from_json(text: str) -> SurfaceComplex:
    doc = json.loads(text)
    errors: list[str] = []
    if doc.get("format") != FORMAT_VERSION:
        errors.append("unsupported format version")
    spine_doc = doc.get("spine", {})
    spine = SpineGraph(
        doc.get("genus", 0),
        tuple(spine_doc.get("vertices", [])),
        tuple(SpineEdge(*e) for e in spine_doc.get("edges", [])),
        frozenset(spine_doc.get("tree", [])),
    )
    try:
        hb = ps_balls(spine)
    except Exception as exc:
        raise DocumentError(errors + [str(exc)]) from exc
    arcs = tuple(Arc(a["id"], a.get("disk"), parent=a.get("parent"), ball=a.get("ball"))
                 for a in doc.get("arcs", []))
    pieces = tuple(
        Piece(p["id"], p["ball"], p["kind"],
              tuple(DEdge(w[0], w[1], w[2]) for w in p["word"]),
              spine_crossings=p.get("spine_crossings", 0))
        for p in doc.get("pieces", []))
    if errors:
        raise DocumentError(errors)
    spine_faces = tuple((d, tuple(k)) for d, k in doc.get("spine_faces", []))
    return SurfaceComplex(hb, arcs, pieces, spine_faces)


def canonical_form(s: SurfaceComplex):
    """Comparable value invariant under renaming of arcs and pieces.

    Arcs are renamed by their layout position (disk, forest path); pieces by
    ball, kind, crossings and their renamed boundary word in minimal
    rotation.  Two complexes with equal canonical forms differ only by ids.
    """
    from .surface import index as _index

    idx = _index(s)
    names: dict[str, tuple] = {}
    for disk in sorted({a.disk for a in s.arcs if a.disk is not None}):
        def assign(arc: Arc, path: tuple) -> None:
            names[arc.id] = (disk, path)
            for k, c in enumerate(idx.children[arc.id]):
                assign(c, path + (k,))

        for r_i, root in enumerate(idx.roots_on_disk.get(disk, [])):
            assign(root, (r_i,))
    internals = sorted((a.ball, a.id) for a in s.arcs if a.internal)
    for k, (ball, aid) in enumerate(internals):
        names[aid] = ("@" + str(ball), (k,))

    def word_key(p: Piece) -> tuple:
        toks = tuple((names[d.arc], d.side, d.sign) for d in p.word)
        if not toks:
            return ()
        rotations = [toks[i:] + toks[:i] for i in range(len(toks))]
        return min(rotations)

    piece_keys = sorted((p.ball, p.kind, p.spine_crossings, word_key(p))
                        for p in s.pieces)
    arc_keys = sorted((names[a.id],
                       names[a.parent] if a.parent else None) for a in s.arcs)
    face_keys = sorted(
        (d, k if k == ("center",) else ("off", names[k[1]])) for d, k in s.spine_faces
        if k != ("center",))
    return (tuple(arc_keys), tuple(piece_keys), tuple(face_keys))
