"""Integer feasibility search for a compressing-disk certificate.

Candidate disks are assembled from polygon classes: instances glued along
matched chords on opposite sides of a disk, grown connectedly from a bigon
seed, pruned by the Euler-characteristic equation, the edge balance, and
the parallel-bigon bound.  A found assembly is re-verified independently
before it is reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .polygons import PolygonCensus, PolygonType, polygon_census, polygon_check
from .position import (
    check_standard_properties,
    complexity,
    find_movable_saddles,
    normalize_internal,
    reduce_to_standard,
)
from .regions import RegionError
from .retract import build_graph, is_trivial
from .surface import SurfaceComplex, disk_faces, index, validate


@dataclass(frozen=True)
class Certificate:
    """A glued polygon multiset witnessing a compressing disk."""

    instances: tuple[int, ...]  # class index per instance
    matching: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    # each side: (instance number, chord position within the class cycle)
    classes: tuple[PolygonType, ...]

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for c in self.instances:
            out[c] = out.get(c, 0) + 1
        return out

    def counts_by_size(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for c in self.instances:
            m = self.classes[c].size // 2
            out[m] = out.get(m, 0) + 1
        return out

    def edge_count(self) -> int:
        return sum(self.classes[c].size // 2 for c in self.instances)


class Infeasible:
    """Search completed with no certificate; carries the explored bound."""

    def __init__(self, examined: int, bound: int):
        self.examined = examined
        self.bound = bound

    def __repr__(self):
        return f"Infeasible(examined={self.examined}, bound={self.bound})"


def _class_caps(pc: PolygonCensus) -> dict[int, int]:
    """Multiplicity caps: bigons by N_c, the rest by the edge budget."""
    bigons = [i for i, c in enumerate(pc.classes) if c.bigon]
    b2 = pc.nc * len(bigons)
    caps: dict[int, int] = {}
    spare = max(b2 - 2, 0)
    budget = b2
    for i, c in enumerate(pc.classes):
        m = c.size // 2
        if c.bigon:
            caps[i] = pc.nc
        elif m >= 3:
            caps[i] = spare // (m - 2)
            budget += m * caps[i]
    for i, c in enumerate(pc.classes):
        m = c.size // 2
        if not c.bigon and m == 2:
            caps[i] = budget // 2
        elif not c.bigon and m < 2:
            caps[i] = 0
    return caps


def solve(pc: PolygonCensus, class_order: list[int] | None = None):
    """Search for a glued selection satisfying the equation set.

    Returns a Certificate or an Infeasible record.  Search is exhaustive up
    to the multiplicity caps; the verdict is independent of class order.
    """
    classes = pc.classes
    bigon_idx = [i for i, c in enumerate(classes) if c.bigon]
    if not bigon_idx:
        return Infeasible(0, 1)
    caps = _class_caps(pc)
    order = class_order if class_order is not None else list(range(len(classes)))
    examined = 0
    bound = 1
    for i in caps:
        bound *= caps[i] + 1

    chord_keys = {i: [(d, f, a, side) for (d, f, a, side) in classes[i].chords()]
                  for i in range(len(classes))}

    def partner(key):
        d, f, a, side = key
        return (d, f, a, "B" if side == "A" else "A")

    best: list[Certificate | None] = [None]

    def complete(instances, matching) -> Certificate | None:
        counts = {}
        for c in instances:
            counts[c] = counts.get(c, 0) + 1
        chi2 = sum(2 - classes[c].size // 2 for c in instances)
        if chi2 != 2:
            return None
        cert = Certificate(tuple(instances), tuple(matching), classes)
        ok, _reason = check_certificate_arithmetic(cert, pc)
        if not ok:
            return None
        return cert

    def dfs(instances: list[int], unmatched: list[tuple[int, int]],
            matching: list) -> Certificate | None:
        nonlocal examined
        examined += 1
        if examined > max(bound, 200000):
            return None
        counts: dict[int, int] = {}
        for c in instances:
            counts[c] = counts.get(c, 0) + 1
        # Euler pruning: bigons raise the chi sum by 1/2 each, nothing else does.
        chi2 = sum(2 - classes[c].size // 2 for c in instances)
        rem_bigons = sum(max(caps.get(i, 0) - counts.get(i, 0), 0) for i in bigon_idx)
        if chi2 + rem_bigons < 2:
            return None
        if not unmatched:
            return complete(instances, matching)
        slot = unmatched[0]
        inst, pos = slot
        key = chord_keys[instances[inst]][pos]
        want = partner(key)
        # Match against another open slot.
        for k, other in enumerate(unmatched[1:], start=1):
            okey = chord_keys[instances[other[0]]][other[1]]
            if okey == want:
                res = dfs(instances, unmatched[1:k] + unmatched[k + 1:],
                          matching + [(slot, other)])
                if res is not None:
                    return res
        # Or spawn a new instance of a class carrying the partner chord.
        for ci in order:
            if counts.get(ci, 0) >= caps.get(ci, 0):
                continue
            for pos2, k2 in enumerate(chord_keys[ci]):
                if k2 != want:
                    continue
                new_inst = len(instances)
                new_slots = [(new_inst, p) for p in range(len(chord_keys[ci]))
                             if p != pos2]
                res = dfs(instances + [ci], unmatched[1:] + new_slots,
                          matching + [(slot, (new_inst, pos2))])
                if res is not None:
                    return res
        return None

    for seed in order:
        if seed not in bigon_idx or caps.get(seed, 0) < 1:
            continue
        slots = [(0, p) for p in range(len(chord_keys[seed]))]
        res = dfs([seed], slots, [])
        if res is not None:
            return res
    return Infeasible(examined, bound)


# ---------------------------------------------------------------------------
# Independent certificate verification
# ---------------------------------------------------------------------------


def check_certificate_arithmetic(cert: Certificate, pc: PolygonCensus):
    """Equation-set arithmetic alone (used inside the search as well)."""
    by_size = cert.counts_by_size()
    chi_twice = sum((2 - m) * n for m, n in by_size.items())
    if chi_twice != 2:
        return False, "pull-back Euler characteristic is not 1"
    edges = cert.edge_count()
    if edges != 2 * len(cert.matching):
        return False, "edge balance fails: unmatched chord instances"
    counts = cert.multiplicities()
    n2 = sum(n for c, n in counts.items() if cert.classes[c].bigon)
    bigon_classes = sum(1 for c in cert.classes if c.bigon)
    if n2 > pc.nc * bigon_classes:
        return False, "bigon count exceeds N_c * |P_2|"
    for c, n in counts.items():
        if cert.classes[c].bigon and n > pc.nc:
            return False, "a bigon class exceeds its parallel bound N_c"
    return True, ""


def verify_certificate(cert: Certificate, s: SurfaceComplex,
                       pc: PolygonCensus | None = None):
    """Full re-verification: arithmetic, matching, connectivity, embedding.

    The Euler characteristic is recomputed through the 3-valent pull-back
    count V - E + F; every failure names its clause.
    """
    pc = pc or polygon_census(s)
    ok, reason = check_certificate_arithmetic(cert, pc)
    if not ok:
        return False, reason
    m_total = cert.edge_count()
    v = m_total  # half of sum over polygons of their 2m corners
    e = 3 * m_total // 2 if (3 * m_total) % 2 == 0 else None
    f = len(cert.instances)
    if e is None or v - e + f != 1:
        return False, "V - E + F does not equal 1"

    slots_seen = set()
    for a, b in cert.matching:
        if a == b:
            return False, "a chord is matched to itself"
        for side in (a, b):
            if side in slots_seen:
                return False, "a chord is matched twice"
            slots_seen.add(side)
        ka = cert.classes[cert.instances[a[0]]].chords()[a[1]]
        kb = cert.classes[cert.instances[b[0]]].chords()[b[1]]
        if ka[:3] != kb[:3] or ka[3] == kb[3]:
            return False, "matched chords do not face each other across a disk"
    expected = sum(len(cert.classes[c].chords()) for c in cert.instances)
    if len(slots_seen) != expected:
        return False, "matching is not a perfect pairing of chord instances"

    parent = list(range(len(cert.instances)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in cert.matching:
        ra, rb = find(a[0]), find(b[0])
        if ra != rb:
            parent[ra] = rb
    if len({find(i) for i in range(len(cert.instances))}) != 1:
        return False, "glued complex is not connected"

    ok, reason = _check_embedding(cert, s)
    if not ok:
        return False, reason

    for ci in set(cert.instances):
        problems = polygon_check(s, cert.classes[ci])
        if problems:
            return False, f"polygon fails its definition: {problems[0]}"
    return True, ""


def _face_cycle_order(s: SurfaceComplex, disk: str, face_key: tuple) -> list[str]:
    faces = disk_faces(s, disk)
    return faces.get(face_key, [])


def _check_embedding(cert: Certificate, s: SurfaceComplex):
    """Matched chords must be drawable disjointly: no interleaving on any
    disk face, and no interleaving of sheet paths on any piece side."""
    per_face: dict[tuple, list[frozenset]] = {}
    for a, b in cert.matching:
        d, f, arcs, _side = cert.classes[cert.instances[a[0]]].chords()[a[1]]
        per_face.setdefault((d, f), []).append(arcs)
    for (d, f), chords in per_face.items():
        border = _face_cycle_order(s, d, f)
        pos = {arc: i for i, arc in enumerate(border)}
        n = len(border)
        for i in range(len(chords)):
            for j in range(i + 1, len(chords)):
                c1, c2 = chords[i], chords[j]
                if c1 & c2:
                    continue
                x, y = sorted(pos[a] for a in c1)
                z, w = sorted(pos[a] for a in c2)
                inside1 = (x < z < y) != (x < w < y)
                _ = n
                if inside1:
                    return False, "two glued chords cross on a disk face"

    idx = index(s)
    per_side: dict[tuple, list[tuple[str, str]]] = {}
    for inst, ci in enumerate(cert.instances):
        for step in cert.classes[ci].cycle:
            face = step[0]
            if isinstance(face, tuple) and len(face) == 2 and isinstance(face[0], str):
                per_side.setdefault(face, []).append((step[1], step[2]))
    for (cluster, _lr), paths in per_side.items():
        p = idx.pieces.get(cluster)
        if p is None:
            continue
        arcs_in_word = [d.arc for d in p.word]
        if len(set(arcs_in_word)) != len(arcs_in_word):
            continue  # self-glued piece: order test not applicable
        pos = {arc: i for i, arc in enumerate(arcs_in_word)}
        for i in range(len(paths)):
            for j in range(i + 1, len(paths)):
                p1, p2 = paths[i], paths[j]
                if set(p1) & set(p2):
                    continue
                try:
                    x, y = sorted((pos[p1[0]], pos[p1[1]]))
                    z, w = sorted((pos[p2[0]], pos[p2[1]]))
                except KeyError:
                    continue
                if (x < z < y) != (x < w < y):
                    return False, "two sheet paths cross on a piece side"
    return True, ""


# ---------------------------------------------------------------------------
# The decision pipeline
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    kind: str  # "compressible" | "incompressible" | "indeterminate"
    reason: str = ""
    cycle_witness: tuple = ()
    certificate: Certificate | None = None
    diagnostics: dict = field(compare=False, default_factory=dict)

    @property
    def compressible(self) -> bool:
        return self.kind == "compressible"

    @property
    def incompressible(self) -> bool:
        return self.kind == "incompressible"


def decide(s: SurfaceComplex) -> Verdict:
    """Full pipeline: validate, reduce, graph test, polygon feasibility."""
    rep = validate(s)
    if not rep.ok():
        return Verdict("indeterminate",
                       reason="validation failed: "
                       + "; ".join(v.message for v in rep.errors),
                       diagnostics={"validation": [str(v) for v in rep.entries]})
    diagnostics: dict = {}
    before = complexity(s)
    s, _n = normalize_internal(s)
    s, log = reduce_to_standard(s)
    after = complexity(s)
    diagnostics["complexity_before"] = before.as_list()
    diagnostics["complexity_after"] = after.as_list()
    diagnostics["moves"] = [(r.kind, list(r.detail)) for r in log]

    g = build_graph(s)
    trivial, witness = is_trivial(g)
    if trivial:
        cyc = tuple((f.edge, f.seg) for f in (witness or []))
        return Verdict("compressible", reason="retract graph has an in-ball cycle",
                       cycle_witness=cyc, diagnostics=diagnostics)

    movable = find_movable_saddles(s)
    if movable:
        return Verdict("indeterminate",
                       reason="not reducible to movable-saddle-free form",
                       diagnostics=diagnostics)
    diagnostics["standard_properties"] = check_standard_properties(s).details

    try:
        pc = polygon_census(s)
    except RegionError as exc:
        return Verdict("indeterminate", reason=f"region structure failed: {exc}",
                       diagnostics=diagnostics)
    diagnostics["nc"] = pc.nc
    diagnostics["bigons_per_ball"] = dict(pc.bigons_per_ball)
    diagnostics["bigon_classes"] = pc.bigon_count
    if pc.bigon_count == 0:
        return Verdict("incompressible", reason="no bigon class exists (III a)",
                       diagnostics=diagnostics)
    res = solve(pc)
    if isinstance(res, Infeasible):
        diagnostics["examined"] = res.examined
        return Verdict("incompressible",
                       reason="equation set has no glued solution (III b)",
                       diagnostics=diagnostics)
    ok, why = verify_certificate(res, s, pc)
    if not ok:
        return Verdict("indeterminate",
                       reason=f"solver produced an unverifiable certificate: {why}",
                       diagnostics=diagnostics)
    return Verdict("compressible", reason="glued polygon certificate found",
                   certificate=res, diagnostics=diagnostics)
