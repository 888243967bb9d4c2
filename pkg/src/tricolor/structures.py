"""Detection of the short-cycle structures the coloring argument runs on.

Everything here is a pure function of an immutable PlaneGraph: bounded cycle
enumeration, triangular markings, class membership (no 4-/5-cycles, no
ext-triangular 7-cycles), chords and the claw family with their cell tuples,
good/bad cycle classification, splitting paths, per-face vertex roles, weak
tetrads, M-/MM-faces, and the 6-face/3-face edge pattern.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .plane_graph import (
    CycleRef,
    FaceWalk,
    PlaneGraph,
    PlaneGraphError,
    Vertex,
    Edge,
    _trace_walks,
    _DSU,
    cycle_face_sides,
    edge_key,
    sides_of_cycle,
)

CYCLE_BUDGET = 12  # no predicate needs longer cycles


class PreconditionError(PlaneGraphError):
    """An operation was called outside its stated preconditions."""


# -- triangles and triangular markings ----------------------------------------

def triangles(g: PlaneGraph) -> list[tuple[Vertex, Vertex, Vertex]]:
    """All 3-cycles, as sorted vertex triples."""
    found = set()
    for u, v in g.edges():
        for w in g.neighbors(u) & g.neighbors(v):
            found.add(tuple(sorted((u, v, w))))
    return sorted(found)


@dataclass(frozen=True)
class TriangularStatus:
    edges: frozenset
    vertices: frozenset


def triangular_status(g: PlaneGraph) -> TriangularStatus:
    """Edges and vertices incident with some triangle."""
    e: set[Edge] = set()
    v: set[Vertex] = set()
    for a, b, c in triangles(g):
        e.update((edge_key(a, b), edge_key(b, c), edge_key(a, c)))
        v.update((a, b, c))
    return TriangularStatus(frozenset(e), frozenset(v))


# -- bounded simple-cycle enumeration ------------------------------------------

def raw_cycles(g: PlaneGraph, lmax: int) -> list[tuple[Vertex, ...]]:
    """Simple cycles of length <= lmax, one vertex tuple per cycle."""
    if lmax > CYCLE_BUDGET:
        raise ValueError(f"cycle length budget is {CYCLE_BUDGET}")
    order = {v: i for i, v in enumerate(g.vertices)}
    out = []
    for s in g.vertices:
        base = order[s]
        stack: list[tuple[Vertex, tuple[Vertex, ...]]] = [(s, (s,))]
        while stack:
            v, path = stack.pop()
            used = set(path)
            for w in sorted(g.neighbors(v), reverse=True):
                if w == s:
                    if len(path) >= 3 and path[1] < path[-1]:
                        out.append(path)
                elif order[w] > base and w not in used and len(path) < lmax:
                    stack.append((w, path + (w,)))
    return sorted(out, key=lambda c: (len(c), c))


def enumerate_cycles(g: PlaneGraph, lmax: int = CYCLE_BUDGET) -> list[CycleRef]:
    """Simple cycles of length <= lmax with their interior/exterior computed."""
    return [sides_of_cycle(g, c) for c in raw_cycles(g, lmax)]


# -- ext-triangular test -------------------------------------------------------

def is_ext_triangular(g: PlaneGraph, c: CycleRef) -> tuple[bool, tuple | None]:
    """True iff a triangle distinct from c shares an edge with c and lies
    entirely in the closed exterior of c (which includes c itself)."""
    ref, face_ext = cycle_face_sides(g, c.verts)
    cedges = ref.edge_set()
    allowed_verts = ref.exterior | set(ref.verts)

    def edge_on_ext_side(u: Vertex, v: Vertex) -> bool:
        e = edge_key(u, v)
        if e in cedges:
            return True
        return face_ext[g._face_of_dir[(u, v)]]

    n = len(ref.verts)
    for i in range(n):
        u, v = ref.verts[i], ref.verts[(i + 1) % n]
        for w in sorted(g.neighbors(u) & g.neighbors(v)):
            tri_edges = frozenset((edge_key(u, v), edge_key(u, w), edge_key(v, w)))
            if tri_edges == cedges:
                continue  # a cycle is not adjacent to itself
            if w in allowed_verts and edge_on_ext_side(u, w) and edge_on_ext_side(v, w):
                return True, tuple(sorted((u, v, w)))
    return False, None


# -- class membership ----------------------------------------------------------

@dataclass(frozen=True)
class ClassReport:
    ok: bool
    violation: str | None = None       # '4-cycle' | '5-cycle' | 'ext-triangular-7-cycle'
    cycle: tuple[Vertex, ...] | None = None
    triangle: tuple | None = None


def in_class(g: PlaneGraph) -> ClassReport:
    """Membership in the class: no 4-cycles, no 5-cycles, and no 7-cycle
    adjacent to a triangle in its closed exterior."""
    sevens = []
    for cyc in raw_cycles(g, 7):
        n = len(cyc)
        if n in (4, 5):
            return ClassReport(False, f"{n}-cycle", cyc)
        if n == 7:
            sevens.append(cyc)
    for cyc in sevens:
        ref = sides_of_cycle(g, cyc)
        ext, tri = is_ext_triangular(g, ref)
        if ext:
            return ClassReport(False, "ext-triangular-7-cycle", cyc, tri)
    return ClassReport(True)


# -- bad partitions: chords and the claw family ---------------------------------

@dataclass(frozen=True)
class BadPartition:
    kind: str                                # chord|claw|biclaw|triclaw|combclaw
    cycle: tuple[Vertex, ...]                # canonical vertex tuple of C
    attachment: frozenset                    # edges of the structure T
    cells: tuple[tuple[Vertex, ...], ...]    # cell walks (vertex tuples)
    cell_lengths: tuple[int, ...]            # canonical length tuple
    key: tuple                               # dedup identity

    def __repr__(self) -> str:
        return f"{self.kind}{self.cell_lengths} on ({'-'.join(self.cycle)})"


def _dihedral_min(seq) -> tuple:
    seq = tuple(seq)
    n = len(seq)
    best = None
    for cand in (seq, tuple(reversed(seq))):
        doubled = cand + cand
        for i in range(n):
            rot = doubled[i:i + n]
            if best is None or rot < best:
                best = rot
    return best


def _subgraph_cells(g: PlaneGraph, h_edges: set[Edge]) -> list[tuple[Vertex, ...]]:
    """Faces of the sub-embedding on h_edges, excluding the face whose region
    contains the outer face of g.  For a cycle plus an interior structure these
    are exactly the cells of the bad partition."""
    h_verts = {v for e in h_edges for v in e}
    rot = {v: tuple(n for n in g.rotation[v] if edge_key(v, n) in h_edges) for v in h_verts}
    walks = _trace_walks(rot)
    dsu = _DSU(len(g.faces))
    for u, v in g.edges():
        if edge_key(u, v) not in h_edges:
            dsu.union(g._face_of_dir[(u, v)], g._face_of_dir[(v, u)])
    outer_root = dsu.find(g.faces.index(g.outer_face))
    cells = []
    for w in walks:
        if dsu.find(g._face_of_dir[w[0]]) != outer_root:
            cells.append(tuple(u for u, _ in w))
    return cells


def _cell_edge_sets(cells) -> list[frozenset]:
    out = []
    for cell in cells:
        n = len(cell)
        out.append(frozenset(edge_key(cell[i], cell[(i + 1) % n]) for i in range(n)))
    return out


def _unique_cell(cells, edge_sets, must_have, must_not=frozenset()):
    hits = [i for i, es in enumerate(edge_sets)
            if must_have <= es and not (must_not & es)]
    return hits[0] if len(hits) == 1 else None


def find_chords(g: PlaneGraph, c: CycleRef) -> list[BadPartition]:
    """Edges of the closed interior joining nonconsecutive cycle vertices."""
    ref, face_ext = cycle_face_sides(g, c.verts)
    cverts = list(ref.verts)
    on = set(cverts)
    cedges = ref.edge_set()
    pos = {v: i for i, v in enumerate(cverts)}
    n = len(cverts)
    out = []
    for u, v in g.edges():
        if u not in on or v not in on:
            continue
        e = edge_key(u, v)
        if e in cedges:
            continue
        if face_ext[g._face_of_dir[(u, v)]]:
            continue  # drawn outside: not part of the closed interior
        gap = abs(pos[u] - pos[v])
        arc = min(gap, n - gap)
        lengths = tuple(sorted((arc + 1, n - arc + 1)))
        cells = _subgraph_cells(g, set(cedges) | {e})
        out.append(BadPartition("chord", ref.canonical(), frozenset([e]),
                                tuple(cells), lengths,
                                key=("chord", ref.canonical(), e)))
    return sorted(out, key=lambda p: p.key)


def find_claws(g: PlaneGraph, c: CycleRef) -> list[BadPartition]:
    on = set(c.verts)
    out = []
    for v in sorted(c.interior):
        feet = sorted(n for n in g.neighbors(v) if n in on)
        if len(feet) < 3:
            continue
        for combo in itertools.combinations(feet, 3):
            t_edges = {edge_key(v, f) for f in combo}
            cells = _subgraph_cells(g, set(c.edge_set()) | t_edges)
            if len(cells) != 3:
                continue
            edge_sets = _cell_edge_sets(cells)
            rot_feet = [n for n in g.rotation[v] if n in combo]
            ks = []
            ordered_cells = []
            ok = True
            for i in range(3):
                pair = {edge_key(v, rot_feet[i]), edge_key(v, rot_feet[(i + 1) % 3])}
                idx = _unique_cell(cells, edge_sets, pair)
                if idx is None:
                    ok = False
                    break
                ks.append(len(cells[idx]))
                ordered_cells.append(cells[idx])
            if not ok:
                continue
            out.append(BadPartition("claw", c.canonical(), frozenset(t_edges),
                                    tuple(ordered_cells), _dihedral_min(ks),
                                    key=("claw", c.canonical(), v, combo)))
    return sorted(out, key=lambda p: p.key)


def find_biclaws(g: PlaneGraph, c: CycleRef) -> list[BadPartition]:
    on = set(c.verts)
    interior = c.interior
    out = []
    seen = set()
    for u in sorted(interior):
        for v in sorted(g.neighbors(u) & interior):
            if v <= u:
                continue
            u_feet = sorted(n for n in g.neighbors(u) if n in on)
            v_feet = sorted(n for n in g.neighbors(v) if n in on)
            if len(u_feet) < 2 or len(v_feet) < 2:
                continue
            euv = edge_key(u, v)
            for up in itertools.combinations(u_feet, 2):
                for vp in itertools.combinations(v_feet, 2):
                    key = ("biclaw", c.canonical(),
                           frozenset(((u, up), (v, vp))))
                    if key in seen:
                        continue
                    seen.add(key)
                    t_edges = {euv, edge_key(u, up[0]), edge_key(u, up[1]),
                               edge_key(v, vp[0]), edge_key(v, vp[1])}
                    if len(t_edges) != 5:
                        continue
                    cells = _subgraph_cells(g, set(c.edge_set()) | t_edges)
                    if len(cells) != 4:
                        continue
                    edge_sets = _cell_edge_sets(cells)
                    u_legs = {edge_key(u, up[0]), edge_key(u, up[1])}
                    v_legs = {edge_key(v, vp[0]), edge_key(v, vp[1])}
                    end_u = _unique_cell(cells, edge_sets, u_legs, {euv})
                    end_v = _unique_cell(cells, edge_sets, v_legs, {euv})
                    mids = [i for i, es in enumerate(edge_sets) if euv in es]
                    if end_u is None or end_v is None or len(mids) != 2:
                        continue
                    eu, ev = len(cells[end_u]), len(cells[end_v])
                    ma, mb = len(cells[mids[0]]), len(cells[mids[1]])
                    canon = min((eu, ma, ev, mb), (ev, mb, eu, ma),
                                (eu, mb, ev, ma), (ev, ma, eu, mb))
                    out.append(BadPartition(
                        "biclaw", c.canonical(), frozenset(t_edges),
                        (cells[end_u], cells[mids[0]], cells[end_v], cells[mids[1]]),
                        canon, key=key))
    return sorted(out, key=lambda p: repr(p.key))


def find_triclaws(g: PlaneGraph, c: CycleRef) -> list[BadPartition]:
    interior = c.interior
    on = set(c.verts)
    out = []
    for a, b, d in triangles(g):
        if not (a in interior and b in interior and d in interior):
            continue
        feet = {x: sorted(n for n in g.neighbors(x) if n in on) for x in (a, b, d)}
        if any(not f for f in feet.values()):
            continue
        tri_edges = {edge_key(a, b), edge_key(b, d), edge_key(a, d)}
        for fa in feet[a]:
            for fb in feet[b]:
                for fd in feet[d]:
                    t_edges = tri_edges | {edge_key(a, fa), edge_key(b, fb),
                                           edge_key(d, fd)}
                    if len(t_edges) != 6:
                        continue
                    cells = _subgraph_cells(g, set(c.edge_set()) | t_edges)
                    if len(cells) != 4:
                        continue
                    edge_sets = _cell_edge_sets(cells)
                    t_cell = next((i for i, es in enumerate(edge_sets)
                                   if es == frozenset(tri_edges)), None)
                    if t_cell is None:
                        continue
                    legs = []
                    ok = True
                    for e in (edge_key(a, b), edge_key(b, d), edge_key(a, d)):
                        hits = [i for i, es in enumerate(edge_sets)
                                if e in es and i != t_cell]
                        if len(hits) != 1:
                            ok = False
                            break
                        legs.append(len(cells[hits[0]]))
                    if not ok:
                        continue
                    out.append(BadPartition(
                        "triclaw", c.canonical(), frozenset(t_edges),
                        tuple(cells), (3,) + _dihedral_min(legs),
                        key=("triclaw", c.canonical(),
                             frozenset(((a, fa), (b, fb), (d, fd))))))
    return sorted(out, key=lambda p: repr(p.key))


def find_combclaws(g: PlaneGraph, c: CycleRef) -> list[BadPartition]:
    interior = c.interior
    on = set(c.verts)
    out = []
    seen = set()
    for tri in triangles(g):
        if not all(t in interior for t in tri):
            continue
        for u in tri:
            v, w = sorted(set(tri) - {u})
            v_feet = sorted(n for n in g.neighbors(v) if n in on)
            w_feet = sorted(n for n in g.neighbors(w) if n in on)
            if not v_feet or not w_feet:
                continue
            for x in sorted((g.neighbors(u) & interior) - set(tri)):
                x_feet = sorted(n for n in g.neighbors(x) if n in on)
                if len(x_feet) < 2:
                    continue
                for xp in itertools.combinations(x_feet, 2):
                    for v1 in v_feet:
                        for w1 in w_feet:
                            key = ("combclaw", c.canonical(), u, x, xp,
                                   frozenset(((v, v1), (w, w1))))
                            if key in seen:
                                continue
                            seen.add(key)
                            euv, evw, ewu = (edge_key(u, v), edge_key(v, w),
                                             edge_key(u, w))
                            eux = edge_key(u, x)
                            t_edges = {euv, evw, ewu, eux,
                                       edge_key(x, xp[0]), edge_key(x, xp[1]),
                                       edge_key(v, v1), edge_key(w, w1)}
                            if len(t_edges) != 8:
                                continue
                            cells = _subgraph_cells(g, set(c.edge_set()) | t_edges)
                            if len(cells) != 5:
                                continue
                            edge_sets = _cell_edge_sets(cells)
                            t_cell = next((i for i, es in enumerate(edge_sets)
                                           if es == frozenset((euv, evw, ewu))), None)
                            x_cell = _unique_cell(cells, edge_sets,
                                                  {edge_key(x, xp[0]), edge_key(x, xp[1])},
                                                  {eux})
                            a_cell = _unique_cell(cells, edge_sets, {euv, eux})
                            b_cell = _unique_cell(cells, edge_sets, {ewu, eux})
                            d_hits = [i for i, es in enumerate(edge_sets)
                                      if evw in es and i != t_cell]
                            if (t_cell is None or x_cell is None or a_cell is None
                                    or b_cell is None or len(d_hits) != 1):
                                continue
                            ka, kb, kd = (len(cells[a_cell]), len(cells[b_cell]),
                                          len(cells[d_hits[0]]))
                            canon = (3, len(cells[x_cell])) + min((ka, kd, kb),
                                                                  (kb, kd, ka))
                            out.append(BadPartition(
                                "combclaw", c.canonical(), frozenset(t_edges),
                                tuple(cells), canon, key=key))
    return sorted(out, key=lambda p: repr(p.key))


# -- good / bad / long ----------------------------------------------------------

class CycleKind(Enum):
    GOOD = "good"
    BAD = "bad"
    LONG = "long"


@dataclass(frozen=True)
class Classification:
    kind: CycleKind
    partitions: tuple[BadPartition, ...]


def classify_cycle(g: PlaneGraph, c: CycleRef) -> Classification:
    """Good: an 11-minus-cycle with none of the four attached structures.
    Chords do not make a cycle bad."""
    if len(c) >= 12:
        return Classification(CycleKind.LONG, ())
    parts = (find_claws(g, c) + find_biclaws(g, c) + find_triclaws(g, c)
             + find_combclaws(g, c))
    return Classification(CycleKind.BAD if parts else CycleKind.GOOD, tuple(parts))


# -- feasible cell tuples (abstract arithmetic) ----------------------------------

# Cell complexes of the four structures: which cell slots share an edge, and
# which slot subsets form disks (with how many internal shared edges).
_COMPLEXES: dict[str, dict] = {
    "claw": dict(
        slots=3, triangle_slot=None,
        shared=[(0, 1), (1, 2), (2, 0)],
        unions=[({0, 1}, 1), ({1, 2}, 1), ({2, 0}, 1), ({0, 1, 2}, 3)],
    ),
    "biclaw": dict(
        # 0 = end cell at u, 1/3 = middle cells (contain uv), 2 = end cell at v
        slots=4, triangle_slot=None,
        shared=[(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)],
        unions=[({0, 1}, 1), ({1, 2}, 1), ({2, 3}, 1), ({3, 0}, 1), ({1, 3}, 1),
                ({0, 1, 3}, 3), ({1, 2, 3}, 3), ({0, 1, 2}, 2), ({0, 2, 3}, 2),
                ({0, 1, 2, 3}, 5)],
    ),
    "triclaw": dict(
        # 0 = triangle cell, 1..3 = leg cells in rotation
        slots=4, triangle_slot=0,
        shared=[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)],
        unions=[({0, 1}, 1), ({0, 2}, 1), ({0, 3}, 1), ({1, 2}, 1), ({2, 3}, 1),
                ({3, 1}, 1), ({0, 1, 2}, 3), ({0, 1, 3}, 3), ({0, 2, 3}, 3),
                ({0, 1, 2, 3}, 6)],
    ),
    "combclaw": dict(
        # 0 = triangle, 1 = fork cell at x, 2/3 = cells beside the u-x edge,
        # 4 = cell under the triangle between the v- and w-legs
        slots=5, triangle_slot=0,
        shared=[(0, 2), (0, 3), (0, 4), (2, 3), (1, 2), (1, 3), (2, 4), (3, 4)],
        unions=[({0, 2}, 1), ({0, 3}, 1), ({0, 4}, 1), ({2, 3}, 1), ({1, 2}, 1),
                ({1, 3}, 1), ({2, 4}, 1), ({3, 4}, 1),
                ({0, 2, 3}, 3), ({1, 2, 3}, 3), ({0, 2, 4}, 3), ({0, 3, 4}, 3),
                ({0, 1, 2}, 2), ({0, 1, 3}, 2), ({1, 2, 4}, 2), ({1, 3, 4}, 2),
                ({0, 1, 2, 3}, 5), ({0, 1, 2, 4}, 4), ({0, 1, 3, 4}, 4),
                ({0, 2, 3, 4}, 6),
                ({0, 1, 2, 3, 4}, 8)],
    ),
}


def _canonical_tuple(kind: str, cells: tuple[int, ...]) -> tuple[int, ...]:
    if kind == "chord":
        return tuple(sorted(cells))
    if kind == "claw":
        return _dihedral_min(cells)
    if kind == "biclaw":
        eu, ma, ev, mb = cells
        return min((eu, ma, ev, mb), (ev, mb, eu, ma), (eu, mb, ev, ma),
                   (ev, ma, eu, mb))
    if kind == "triclaw":
        return (3,) + _dihedral_min(cells[1:])
    if kind == "combclaw":
        t, x, a, b, d = cells
        return (3, x) + min((a, d, b), (b, d, a))
    raise ValueError(kind)


def _tuple_feasible(kind: str, cells: tuple[int, ...]) -> bool:
    """Can these cell lengths coexist inside a class member?  Every cell and
    every disk sub-union is a cycle, hence not of length 4 or 5; a 7-cycle
    among them must not have a triangle cell outside it sharing an edge."""
    comp = _COMPLEXES[kind]
    adj = {i: set() for i in range(comp["slots"])}
    for i, j in comp["shared"]:
        adj[i].add(j)
        adj[j].add(i)
    all_unions = [({i}, 0) for i in range(comp["slots"])] + comp["unions"]
    for members, internal in all_unions:
        length = sum(cells[i] for i in members) - 2 * internal
        if length in (4, 5):
            return False
        if length == 7:
            for i in range(comp["slots"]):
                if i not in members and cells[i] == 3 and adj[i] & members:
                    return False
    return True


def bad_cycle_catalog() -> dict[tuple[str, int], set[tuple[int, ...]]]:
    """All (structure kind, cycle length, canonical cell tuple) combinations a
    class member can carry on an 11-minus-cycle, by exhaustive arithmetic over
    cell lengths >= 3 not equal to 4 or 5."""
    out: dict[tuple[str, int], set] = {}
    for kind, comp in _COMPLEXES.items():
        slots = comp["slots"]
        total_shared = len(comp["shared"])
        for clen in (3, 6, 7, 8, 9, 10, 11):
            target = clen + 2 * total_shared
            allowed = [3] + list(range(6, target + 1))
            pools = []
            for i in range(slots):
                pools.append([3] if i == comp["triangle_slot"] else allowed)
            for cells in itertools.product(*pools):
                if sum(cells) != target:
                    continue
                if _tuple_feasible(kind, cells):
                    out.setdefault((kind, clen), set()).add(
                        _canonical_tuple(kind, cells))
    return out


# -- bad-cycle audit (class-level conclusions) ------------------------------------

@dataclass(frozen=True)
class BadCycleRecord:
    cycle: tuple[Vertex, ...]
    length: int
    tuples: tuple[tuple[str, tuple[int, ...]], ...]
    has_chord: bool
    ext_triangular: bool
    catalog_ok: bool


@dataclass(frozen=True)
class BadCycleReport:
    records: tuple[BadCycleRecord, ...]
    chorded_bad: tuple[tuple[Vertex, ...], ...]
    ext_triangular_bad_9: tuple[tuple[Vertex, ...], ...]


def bad_cycle_report(g: PlaneGraph) -> BadCycleReport:
    """Audit every bad 11-minus-cycle: lengths and tuples must come from the
    catalog, and report the two patterns a minimal configuration cannot have
    (a bad cycle with a chord; an ext-triangular bad 9-cycle)."""
    cls_rep = in_class(g)
    if not cls_rep.ok:
        raise PreconditionError(f"graph outside the class: {cls_rep.violation}")
    catalog = bad_cycle_catalog()
    records = []
    chorded = []
    ext9 = []
    for c in enumerate_cycles(g, 11):
        cl = classify_cycle(g, c)
        if cl.kind is not CycleKind.BAD:
            continue
        tuples = tuple(sorted({(p.kind, p.cell_lengths) for p in cl.partitions}))
        has_chord = bool(find_chords(g, c))
        ext, _ = is_ext_triangular(g, c)
        ok = len(c) in (9, 11) and all(
            lens in catalog.get((kind, len(c)), set()) for kind, lens in tuples)
        rec = BadCycleRecord(c.canonical(), len(c), tuples, has_chord, ext, ok)
        records.append(rec)
        if has_chord:
            chorded.append(c.canonical())
        if ext and len(c) == 9:
            ext9.append(c.canonical())
    return BadCycleReport(tuple(records), tuple(chorded), tuple(ext9))


# -- splitting paths ---------------------------------------------------------------

def find_splitting_paths(g: PlaneGraph, d: CycleRef,
                         lmax: int = 5) -> list[tuple[Vertex, ...]]:
    """Paths of 2..lmax edges with both endpoints on d and every inner vertex
    strictly inside d, each reported once (smaller endpoint first)."""
    on = set(d.verts)
    inside = d.interior
    out = []
    for s in sorted(on):
        stack: list[tuple[Vertex, tuple[Vertex, ...]]] = [(s, (s,))]
        while stack:
            v, path = stack.pop()
            used = set(path)
            for w in sorted(g.neighbors(v), reverse=True):
                if w in used:
                    continue
                if w in on:
                    if len(path) >= 2 and s < w:
                        out.append(path + (w,))
                elif w in inside and len(path) <= lmax - 1:
                    stack.append((w, path + (w,)))
    return sorted(out, key=lambda p: (len(p), p))


@dataclass(frozen=True)
class SplittingPathViolation:
    path: tuple[Vertex, ...]
    side_lengths: tuple[int, int]
    rule: str


def splitting_path_violations(g: PlaneGraph) -> list[SplittingPathViolation]:
    """Splitting paths of the boundary whose two sides contradict what a
    minimal configuration admits: |P|=2 demands a triangle side, |P|=3 never
    occurs, |P|=4 demands a 7-minus side, |P|=5 demands a 9-minus side.
    Only meaningful when the boundary is a good cycle; empty otherwise."""
    bverts = g.boundary_cycle()
    if bverts is None:
        return []
    d = sides_of_cycle(g, bverts)
    if classify_cycle(g, d).kind is not CycleKind.GOOD:
        return []
    pos = {v: i for i, v in enumerate(d.verts)}
    n = len(d.verts)
    out = []
    for path in find_splitting_paths(g, d, 5):
        p = len(path) - 1
        gap = abs(pos[path[0]] - pos[path[-1]])
        arc1, arc2 = min(gap, n - gap), n - min(gap, n - gap)
        sides = (p + arc1, p + arc2)
        m = min(sides)
        rule = None
        if p == 2 and m > 3:
            rule = "2-path-without-triangle-side"
        elif p == 3:
            rule = "3-path"
        elif p == 4 and m > 7:
            rule = "4-path-without-7-minus-side"
        elif p == 5 and m > 9:
            rule = "5-path-without-9-minus-side"
        if rule:
            out.append(SplittingPathViolation(path, sides, rule))
    return out


# -- per-face roles, weak tetrads, M-/MM-faces, 6/3-edges ----------------------------

@dataclass(frozen=True)
class VertexRole:
    vertex: Vertex
    position: int          # corner index on the face walk
    role: str              # heavy | mlight | vlight | none
    bad: bool              # internal triangular 3-vertex


def face_roles(g: PlaneGraph, f: FaceWalk,
               status: TriangularStatus | None = None) -> list[VertexRole]:
    ts = status or triangular_status(g)
    ext = g.boundary_vertices()
    roles = []
    for i, (v, e_in, e_out) in enumerate(f.corners()):
        internal = v not in ext
        bad = internal and v in ts.vertices and g.degree(v) == 3
        role = "none"
        if internal:
            d = g.degree(v)
            both = e_in in ts.edges and e_out in ts.edges
            neither = e_in not in ts.edges and e_out not in ts.edges
            if both and d >= 5:
                role = "heavy"
            elif both and d == 4:
                role = "mlight"
            elif neither and d == 4 and v in ts.vertices:
                role = "vlight"
        roles.append(VertexRole(v, i, role, bad))
    return roles


@dataclass(frozen=True)
class WeakTetrad:
    face_index: int
    path: tuple[Vertex, ...]   # v1..v5 in the matched direction


def find_weak_tetrads(g: PlaneGraph,
                      status: TriangularStatus | None = None) -> list[WeakTetrad]:
    """Paths v1..v5 along a face with v1v2 and v3v4 triangular, v1..v4 internal
    3-vertices, and v5 of degree 3 or f-light.  Both walk directions are
    scanned; dedupe by vertex set for counting."""
    ts = status or triangular_status(g)
    ext = g.boundary_vertices()
    out = []
    for fi, f in enumerate(g.faces):
        verts = f.vertices()
        n = len(verts)
        if n < 6:
            continue
        for walk in (verts, tuple(reversed(verts))):
            for s in range(n):
                win = tuple(walk[(s + k) % n] for k in range(5))
                if len(set(win)) != 5:
                    continue
                v1, v2, v3, v4, v5 = win
                if edge_key(v1, v2) not in ts.edges or edge_key(v3, v4) not in ts.edges:
                    continue
                if any(w in ext or g.degree(w) != 3 for w in (v1, v2, v3, v4)):
                    continue
                if g.degree(v5) == 3:
                    out.append(WeakTetrad(fi, win))
                    continue
                if v5 in ext:
                    continue
                v6 = walk[(s + 5) % n]
                e1, e2 = edge_key(v4, v5), edge_key(v5, v6)
                d5 = g.degree(v5)
                both = e1 in ts.edges and e2 in ts.edges
                neither = e1 not in ts.edges and e2 not in ts.edges
                light = (both and d5 == 4) or (neither and d5 == 4 and v5 in ts.vertices)
                if light:
                    out.append(WeakTetrad(fi, win))
    return sorted(set(out), key=lambda t: (t.face_index, t.path))


def weak_tetrad_count(g: PlaneGraph) -> int:
    return len({frozenset(t.path) for t in find_weak_tetrads(g)})


@dataclass(frozen=True)
class SpecialFace:
    face_index: int
    labelings: tuple[tuple[Vertex, ...], ...]


def _eight_face_labelings(g: PlaneGraph, cond) -> list[SpecialFace]:
    ext = g.boundary_vertices()
    out = []
    for fi, f in enumerate(g.faces):
        if f.size != 8 or f.is_outer:
            continue
        verts = f.vertices()
        if len(set(verts)) != 8 or any(v in ext for v in verts):
            continue
        labs = set()
        for walk in (verts, tuple(reversed(verts))):
            for s in range(8):
                lab = tuple(walk[(s + k) % 8] for k in range(8))
                if cond(lab):
                    labs.add(lab)
        if labs:
            out.append(SpecialFace(fi, tuple(sorted(labs))))
    return out


def find_m_faces(g: PlaneGraph,
                 status: TriangularStatus | None = None) -> list[SpecialFace]:
    """Internal 8-faces [v1..v8], no external vertices, v1,v2,v3,v5,v6,v7 of
    degree 3, and v1v2, v3v4, v4v5, v6v7 triangular."""
    ts = status or triangular_status(g)

    def cond(lab):
        v = (None,) + lab  # 1-indexed
        deg_ok = all(g.degree(v[i]) == 3 for i in (1, 2, 3, 5, 6, 7))
        edges_ok = all(edge_key(v[i], v[j]) in ts.edges
                       for i, j in ((1, 2), (3, 4), (4, 5), (6, 7)))
        return deg_ok and edges_ok

    return _eight_face_labelings(g, cond)


def find_mm_faces(g: PlaneGraph,
                  status: TriangularStatus | None = None) -> list[SpecialFace]:
    """Internal 8-faces [v1..v8], no external vertices, v2 and v7 of degree 4,
    the other six of degree 3, and v1v2, v2v3, v4v5, v6v7, v7v8 triangular."""
    ts = status or triangular_status(g)

    def cond(lab):
        v = (None,) + lab
        deg_ok = (g.degree(v[2]) == 4 and g.degree(v[7]) == 4
                  and all(g.degree(v[i]) == 3 for i in (1, 3, 4, 5, 6, 8)))
        edges_ok = all(edge_key(v[i], v[j]) in ts.edges
                       for i, j in ((1, 2), (2, 3), (4, 5), (6, 7), (7, 8)))
        return deg_ok and edges_ok

    return _eight_face_labelings(g, cond)


@dataclass(frozen=True)
class HexTriEdge:
    edge: Edge
    hex_face: int
    tri_face: int


def find_hex_tri_edges(g: PlaneGraph) -> list[HexTriEdge]:
    """Edges on both a 6-face and a 3-face whose two endpoints are internal
    3-vertices (the pattern removed by the 6-face/3-face reduction)."""
    ext = g.boundary_vertices()
    out = []
    for u, v in g.edges():
        if u in ext or v in ext:
            continue
        if g.degree(u) != 3 or g.degree(v) != 3:
            continue
        f1, f2 = g.faces_of_edge(u, v)
        pair = {f1.size: f1, f2.size: f2}
        if set(pair) == {3, 6}:
            out.append(HexTriEdge(edge_key(u, v),
                                  g.face_index(pair[6]), g.face_index(pair[3])))
    return sorted(out, key=lambda h: h.edge)


# -- combined detector suite ----------------------------------------------------

def detect_all(g: PlaneGraph, deep: bool = True) -> dict[str, list]:
    """Every detector the unavoidability argument draws on.  With deep=False
    the cycle-enumeration detectors are skipped."""
    ext = g.boundary_vertices()
    report: dict[str, list] = {}
    report["internal-low-degree"] = [v for v in g.vertices
                                     if v not in ext and g.degree(v) <= 2]
    report["cut-vertex"] = g.cut_vertices()
    ts = triangular_status(g)
    report["hex-tri-edge"] = find_hex_tri_edges(g)
    report["weak-tetrad"] = find_weak_tetrads(g, ts)
    report["m-face"] = find_m_faces(g, ts)
    report["mm-face"] = find_mm_faces(g, ts)
    report["splitting-path-violation"] = splitting_path_violations(g)
    if deep:
        sep = []
        chorded = []
        ext9 = []
        for c in enumerate_cycles(g, 11):
            cls = classify_cycle(g, c)
            if cls.kind is CycleKind.GOOD and c.interior and c.exterior:
                sep.append(c.canonical())
            if cls.kind is CycleKind.BAD:
                if find_chords(g, c):
                    chorded.append(c.canonical())
                if len(c) == 9 and is_ext_triangular(g, c)[0]:
                    ext9.append(c.canonical())
        report["separating-good-cycle"] = sep
        report["bad-cycle-with-chord"] = chorded
        report["ext-triangular-bad-9-cycle"] = ext9
    return report
