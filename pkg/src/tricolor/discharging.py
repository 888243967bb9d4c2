"""Exact discharging: initial charges, the six transfer rules, final charges,
and the conservation/negativity audit.

All charges are stored as integers counting thirds, so conservation checks are
bit-exact.  Initial charges are deg-4 per vertex and internal face and deg+4
for the outer face; the rules move 1/3, 2/3 or 4/3 between incident elements.
Transfers follow boundary-walk incidences, which keeps the books consistent on
non-2-connected inputs where a face can meet a vertex at several corners.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .plane_graph import PlaneGraph, Vertex, edge_key
from .structures import (
    TriangularStatus,
    find_m_faces,
    find_mm_faces,
    find_weak_tetrads,
    triangular_status,
)

ElementKey = tuple[str, object]  # ("v", name) or ("f", face index)


@dataclass
class ChargeLedger:
    charges: dict[ElementKey, int]  # thirds
    phase: str                      # "initial" | "final"

    def total(self) -> int:
        return sum(self.charges.values())

    def __getitem__(self, key: ElementKey) -> int:
        return self.charges[key]


@dataclass(frozen=True)
class TransferRecord:
    rule: str            # R1..R6
    source: ElementKey
    target: ElementKey
    amount: int          # thirds, always positive


def initial_charges(g: PlaneGraph) -> ChargeLedger:
    """deg(v)-4 per vertex, deg(f)-4 per internal face, deg(f0)+4 outside.
    The total is forced to zero by Euler's formula."""
    charges: dict[ElementKey, int] = {}
    for v in g.vertices:
        charges[("v", v)] = 3 * (g.degree(v) - 4)
    for i, f in enumerate(g.faces):
        charges[("f", i)] = 3 * (f.size + 4) if f.is_outer else 3 * (f.size - 4)
    return ChargeLedger(charges, "initial")


def transfer_rules(g: PlaneGraph,
                   status: TriangularStatus | None = None) -> list[TransferRecord]:
    """R1: internal 3-faces pull 1/3 per incident vertex.
    R2: internal 6+-faces push 2/3 per incident 2-vertex.
    R3: internal 6+-faces push 2/3 to internal triangular 3-vertices, 1/3 to
        internal non-triangular 3-vertices.
    R4: internal 6+-faces push 1/3 per light corner, pull 1/3 per heavy corner.
    R5: internal 6+-faces pull 1/3 per incident external 4+-vertex.
    R6: the outer face pushes 4/3 per incidence."""
    ts = status or triangular_status(g)
    ext = g.boundary_vertices()
    transfers: list[TransferRecord] = []
    for i, f in enumerate(g.faces):
        fkey: ElementKey = ("f", i)
        if f.is_outer:
            for v, _ in f.boundary:
                transfers.append(TransferRecord("R6", fkey, ("v", v), 4))
            continue
        if f.size == 3:
            for v in f.vertices():
                transfers.append(TransferRecord("R1", ("v", v), fkey, 1))
            continue
        if f.size < 6:
            continue
        for v, e_in, e_out in f.corners():
            vkey: ElementKey = ("v", v)
            d = g.degree(v)
            if d == 2:
                transfers.append(TransferRecord("R2", fkey, vkey, 2))
            if v in ext:
                if d >= 4:
                    transfers.append(TransferRecord("R5", vkey, fkey, 1))
                continue
            if d == 3:
                amount = 2 if v in ts.vertices else 1
                transfers.append(TransferRecord("R3", fkey, vkey, amount))
                continue
            both = e_in in ts.edges and e_out in ts.edges
            neither = e_in not in ts.edges and e_out not in ts.edges
            if both and d >= 5:
                transfers.append(TransferRecord("R4", vkey, fkey, 1))
            elif both and d == 4:
                transfers.append(TransferRecord("R4", fkey, vkey, 1))
            elif neither and d == 4 and v in ts.vertices:
                transfers.append(TransferRecord("R4", fkey, vkey, 1))
    return transfers


def replay(ledger: ChargeLedger, transfers: list[TransferRecord]) -> ChargeLedger:
    charges = dict(ledger.charges)
    for t in transfers:
        charges[t.source] -= t.amount
        charges[t.target] += t.amount
    return ChargeLedger(charges, "final")


def apply_rules(g: PlaneGraph,
                ledger: ChargeLedger | None = None,
                status: TriangularStatus | None = None
                ) -> tuple[ChargeLedger, list[TransferRecord]]:
    if ledger is None:
        ledger = initial_charges(g)
    if ledger.phase != "initial":
        raise ValueError("apply_rules expects an initial-phase ledger")
    transfers = transfer_rules(g, status)
    return replay(ledger, transfers), transfers


# -- audit ---------------------------------------------------------------------

@dataclass(frozen=True)
class NegativeElement:
    key: ElementKey
    final: int                # thirds
    tags: tuple[str, ...]     # failed structural predicates explaining it


@dataclass
class DischargeReport:
    initial: ChargeLedger
    final: ChargeLedger
    transfers: list[TransferRecord]
    sum_initial: int
    sum_final: int
    sum_ok: bool
    outer_final: int
    negatives: list[NegativeElement] = field(default_factory=list)


def _explain_vertex(g: PlaneGraph, v: Vertex, ext: frozenset,
                    transfers_to_triangles: int) -> tuple[str, ...]:
    tags = []
    d = g.degree(v)
    if v not in ext and d <= 2:
        tags.append("internal-degree-le-2")
    if v in ext and d == 2:
        if any(f.size == 3 for f in
               (g.face_of_directed((v, n)) for n in g.rotation[v])):
            tags.append("boundary-2-vertex-on-triangle")
    if v in ext and transfers_to_triangles >= 2:
        tags.append("external-vertex-on-multiple-triangles")
    return tuple(tags) or ("unexplained",)


def _explain_face(g: PlaneGraph, fi: int, ts: TriangularStatus,
                  ext: frozenset) -> tuple[str, ...]:
    f = g.faces[fi]
    tags = []
    corners = f.corners()
    low = sum(1 for v, _, _ in corners if g.degree(v) <= 2)
    if low >= 2:
        tags.append("multiple-2-vertices")
    bad_inc = sum(1 for v, _, _ in corners
                  if v not in ext and g.degree(v) == 3 and v in ts.vertices)
    if f.size == 6 and bad_inc >= 2:
        tags.append("six-face-multiple-bad-vertices")
    if f.size == 6:
        tri_adjacent = sum(1 for u, v in f.boundary
                           if g.face_of_directed((v, u)).size == 3)
        if tri_adjacent >= 2:
            tags.append("six-face-multiple-triangles")
    if f.size == 7 and bad_inc >= 1:
        tags.append("seven-face-with-bad-vertex")
    if f.size >= 8:
        if any(t.face_index == fi for t in find_weak_tetrads(g, ts)):
            tags.append("weak-tetrad-on-face")
        if any(m.face_index == fi for m in find_m_faces(g, ts)):
            tags.append("m-face")
        if any(m.face_index == fi for m in find_mm_faces(g, ts)):
            tags.append("mm-face")
        ext_on = [v for v in f.vertex_set() if v in ext]
        if len(ext_on) == 1 and g.degree(ext_on[0]) <= 3:
            tags.append("single-external-low-degree")
        if not ext_on and bad_inc >= 5:
            tags.append("many-bad-vertices")
    return tuple(tags) or ("unexplained",)


def audit(g: PlaneGraph) -> DischargeReport:
    """Run the full discharge and explain every element that ends negative."""
    ts = triangular_status(g)
    initial = initial_charges(g)
    final, transfers = apply_rules(g, initial, ts)
    ext = g.boundary_vertices()
    outer_key = ("f", g.faces.index(g.outer_face))
    tri_sends: dict[Vertex, int] = {}
    for t in transfers:
        if t.rule == "R1":
            tri_sends[t.source[1]] = tri_sends.get(t.source[1], 0) + 1
    negatives = []
    for key in sorted(final.charges):
        value = final.charges[key]
        if value >= 0:
            continue
        if key[0] == "v":
            tags = _explain_vertex(g, key[1], ext, tri_sends.get(key[1], 0))
        else:
            tags = _explain_face(g, key[1], ts, ext)
        negatives.append(NegativeElement(key, value, tags))
    report = DischargeReport(
        initial=initial, final=final, transfers=transfers,
        sum_initial=initial.total(), sum_final=final.total(),
        sum_ok=initial.total() == 0 and final.total() == 0,
        outer_final=final.charges[outer_key], negatives=negatives)
    return report


def format_report(g: PlaneGraph, report: DischargeReport) -> str:
    """Line-oriented report: one `element` line per vertex/face, then the
    conservation flag and the negative elements with their explanations."""
    lines = []
    for key in sorted(report.initial.charges):
        kind, ident = key
        lines.append(f"element kind={kind} id={ident} "
                     f"init={report.initial.charges[key]}/3 "
                     f"final={report.final.charges[key]}/3")
    lines.append(f"sum_ok={'true' if report.sum_ok else 'false'}")
    lines.append(f"outer_final={report.outer_final}/3")
    negs = ",".join(
        f"{k[0]}:{k[1]}={n.final}/3({'|'.join(n.tags)})"
        for n in report.negatives for k in [n.key])
    lines.append(f"negatives=[{negs}]")
    return "\n".join(lines) + "\n"
