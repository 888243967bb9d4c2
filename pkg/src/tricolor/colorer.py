"""3-coloring by precoloring extension.

Three layers:
  * an exhaustive backtracking oracle (extend_backtrack / solve_coloring),
  * an extension audit that classifies the boundary and tries every proper
    boundary coloring up to color permutation (the CLI's `theorem8` command),
  * a proof-guided reducer: find a configuration whose removal is safe,
    recurse on the reduced graph, and lift the coloring back by the local
    recipe attached to that configuration.

On arbitrary inputs a syntactically present configuration may fail the safety
conditions (the identification could create a short cycle, touch the boundary,
and so on).  Safety is always verified on the constructed reduced graph, and
the engine falls back to the oracle when no safe step exists; the fallback
rate is reported in the stats.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .plane_graph import (
    CycleRef,
    FaceWalk,
    IdentificationError,
    PlaneGraph,
    PlaneGraphError,
    ReductionError,
    Vertex,
    delete_vertices,
    edge_key,
    identify_vertices,
    sides_of_cycle,
    sub_plane_graph,
)
from .structures import (
    CycleKind,
    PreconditionError,
    classify_cycle,
    enumerate_cycles,
    find_hex_tri_edges,
    find_m_faces,
    find_mm_faces,
    find_weak_tetrads,
    in_class,
    raw_cycles,
    triangular_status,
)

Coloring = dict[Vertex, int]
COLORS = (1, 2, 3)


class TheoremViolation(PlaneGraphError):
    """A class instance with good boundary refused to extend: by the theorem
    this cannot happen, so it marks either a bug or a refutation artifact."""


# -- propriety and the oracle -----------------------------------------------------

def is_proper(g: PlaneGraph, coloring: Coloring, total: bool = True) -> bool:
    if total and set(coloring) != set(g.vertices):
        return False
    for u, v in g.edges():
        if u in coloring and v in coloring and coloring[u] == coloring[v]:
            return False
    return True


def _smallest_last_order(g: PlaneGraph, targets: list[Vertex]) -> list[Vertex]:
    remaining = set(targets)
    deg = {v: sum(1 for n in g.neighbors(v) if n in remaining) for v in remaining}
    order = []
    while remaining:
        v = min(remaining, key=lambda x: (deg[x], x))
        order.append(v)
        remaining.discard(v)
        for n in g.neighbors(v):
            if n in remaining:
                deg[n] -= 1
    order.reverse()
    return order


def solve_coloring(g: PlaneGraph, fixed: Coloring) -> Coloring | None:
    """First proper total 3-coloring extending `fixed`, or None after
    exhausting the search space."""
    for v, c in fixed.items():
        if c not in COLORS:
            raise ValueError(f"color {c} out of range")
        if not g.has_vertex(v):
            raise ValueError(f"unknown vertex {v}")
    if not is_proper(g, fixed, total=False):
        raise ValueError("fixed part is not proper")
    free = [v for v in g.vertices if v not in fixed]
    order = _smallest_last_order(g, free)
    coloring = dict(fixed)

    def backtrack(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {coloring[n] for n in g.neighbors(v) if n in coloring}
        for c in COLORS:
            if c in taken:
                continue
            coloring[v] = c
            if backtrack(i + 1):
                return True
            del coloring[v]
        return False

    if backtrack(0):
        assert is_proper(g, coloring)
        return coloring
    return None


def boundary_subgraph_edges(g: PlaneGraph) -> list[tuple[Vertex, Vertex]]:
    """Edges of the subgraph induced by the boundary vertices (chords count)."""
    on = g.boundary_vertices()
    return [(u, v) for u, v in g.edges() if u in on and v in on]


def extend_backtrack(g: PlaneGraph, phi: Coloring) -> Coloring | None:
    """Extend a proper boundary precoloring, or report exhaustion with None.
    phi must color every boundary vertex and respect chords."""
    on = g.boundary_vertices()
    if set(phi) != set(on):
        raise ValueError("precoloring must cover exactly the boundary vertices")
    for u, v in boundary_subgraph_edges(g):
        if phi[u] == phi[v]:
            raise ValueError(f"precoloring clashes on edge {u}-{v}")
    return solve_coloring(g, phi)


def boundary_colorings(g: PlaneGraph):
    """Proper 3-colorings of the boundary-induced subgraph, one per color
    permutation class (first vertex fixed to 1, colors introduced in order)."""
    cyc = g.boundary_cycle()
    if cyc is None:
        raise PreconditionError("boundary walk is not a cycle")
    verts = list(cyc)
    edges = boundary_subgraph_edges(g)
    adj: dict[Vertex, set] = {v: set() for v in verts}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    phi: Coloring = {}

    def rec(i: int, used: int):
        if i == len(verts):
            yield dict(phi)
            return
        v = verts[i]
        taken = {phi[n] for n in adj[v] if n in phi}
        limit = min(3, used + 1)
        for c in range(1, limit + 1):
            if c in taken:
                continue
            phi[v] = c
            yield from rec(i + 1, max(used, c))
            del phi[v]

    yield from rec(0, 0)


# -- extension audit (the theorem8 command) -----------------------------------------

@dataclass
class ExtensionAudit:
    class_ok: bool
    class_violation: str | None
    boundary_is_cycle: bool
    boundary_kind: str | None          # good | bad | long
    colorings_checked: int
    violations: list[Coloring]

    @property
    def ok(self) -> bool:
        return not self.violations


def extension_audit(g: PlaneGraph, run_oracle: bool = True) -> ExtensionAudit:
    """Classify the boundary; if it is a good cycle, verify that every proper
    boundary coloring (up to permutation) extends.  A violation is reported,
    never silently dropped: on a class member it refutes the theorem."""
    rep = in_class(g)
    cyc = g.boundary_cycle()
    if cyc is None:
        return ExtensionAudit(rep.ok, rep.violation, False, None, 0, [])
    kind = classify_cycle(g, sides_of_cycle(g, cyc)).kind.value
    checked = 0
    violations = []
    if rep.ok and kind == "good" and run_oracle:
        for phi in boundary_colorings(g):
            checked += 1
            if extend_backtrack(g, phi) is None:
                violations.append(phi)
    return ExtensionAudit(rep.ok, rep.violation, True, kind, checked, violations)


# -- reduction steps ------------------------------------------------------------------

@dataclass
class ReductionStep:
    tag: str                              # deg2|block|sep-cycle|hex-tri-edge|
                                          # weak-tetrad|m-face|mm-face
    reduced: PlaneGraph
    deleted: tuple[Vertex, ...] = ()
    identified: tuple[Vertex, Vertex] | None = None   # (kept, absorbed)
    merged: tuple | None = None
    data: dict = field(default_factory=dict)


@dataclass
class SafetyResult:
    ok: bool
    violations: tuple[str, ...] = ()


STAT_LABELS = {
    "deg2": "L1", "block": "L2", "sep-cycle": "L3", "hex-tri-edge": "L8",
    "weak-tetrad": "L9", "m-face": "L10", "mm-face": "L11",
}


def _new_short_cycle(g: PlaneGraph, reduced: PlaneGraph,
                     kept: Vertex, absorbed: Vertex) -> tuple | None:
    """A cycle of the reduced graph of length <= 6 with no counterpart of the
    same length in g (expanding the identified vertex back to either name)."""
    old_edges = {edge_key(u, v) for u, v in g.edges()}

    def lifts(cyc) -> bool:
        if kept not in cyc:
            return True  # untouched by the identification: existed verbatim
        i = cyc.index(kept)
        prev_v, next_v = cyc[i - 1], cyc[(i + 1) % len(cyc)]
        for name in (kept, absorbed):
            if (edge_key(name, prev_v) in old_edges
                    and edge_key(name, next_v) in old_edges):
                return True
        return False

    for cyc in raw_cycles(reduced, 6):
        if not lifts(cyc):
            return cyc
    return None


def safety_check(g: PlaneGraph, step: ReductionStep,
                 require_good_boundary: bool = True) -> SafetyResult:
    """All conditions under which the recursion may use this step: deletions
    internal only; identification off the boundary, creating no boundary edge,
    no new 6-minus-cycle; the reduced graph simple, connected, in the class,
    with the boundary walk unchanged (and still good unless waived)."""
    violations = []
    reduced = step.reduced
    ext = g.boundary_vertices()
    if any(v in ext for v in step.deleted):
        violations.append("deletes-boundary-vertex")
    if reduced.vertex_count >= g.vertex_count:
        violations.append("no-progress")

    if step.identified is not None:
        kept, absorbed = step.identified
        if kept in ext and absorbed in ext:
            violations.append("identifies-two-boundary-vertices")
        old_bb = {edge_key(u, v) for u, v in g.edges()
                  if u in ext and v in ext}
        new_bb = {edge_key(u, v) for u, v in reduced.edges()
                  if u in ext and v in ext}
        if new_bb - old_bb:
            violations.append("creates-boundary-edge")
        cyc = _new_short_cycle(g, reduced, kept, absorbed)
        if cyc is not None:
            violations.append(f"creates-{len(cyc)}-cycle")

    cls = in_class(reduced)
    if not cls.ok:
        violations.append(f"reduced-graph-{cls.violation}")
    if reduced.outer_face.boundary != tuple(
            e for e in g.outer_face.boundary):
        # the spliced outer walk must be byte-identical: D untouched
        if reduced.outer_face.vertex_set() != g.outer_face.vertex_set():
            violations.append("boundary-changed")
        else:
            violations.append("boundary-rewalked")
    if require_good_boundary:
        bc = reduced.boundary_cycle()
        if bc is None:
            violations.append("boundary-not-a-cycle")
        elif classify_cycle(reduced, sides_of_cycle(reduced, bc)).kind is not CycleKind.GOOD:
            violations.append("boundary-not-good")
    return SafetyResult(not violations, tuple(violations))


# -- step constructors -----------------------------------------------------------------

def _face_with_corner(g: PlaneGraph, a: Vertex, mid: Vertex, b: Vertex):
    """Face whose walk contains a->mid followed by mid->b."""
    for f in g.faces:
        bd = f.boundary
        n = len(bd)
        for i in range(n):
            if bd[i] == (a, mid) and bd[(i + 1) % n] == (mid, b):
                return f
    return None


def _faces_containing(g: PlaneGraph, a: Vertex, b: Vertex) -> list[FaceWalk]:
    return [f for f in g.faces
            if not f.is_outer and a in f.vertex_set() and b in f.vertex_set()]


def _deg2_steps(g: PlaneGraph):
    ext = g.boundary_vertices()
    for v in g.vertices:
        if v not in ext and g.degree(v) <= 2:
            try:
                reduced = delete_vertices(g, {v})
            except ReductionError:
                continue
            yield ReductionStep("deg2", reduced, deleted=(v,), data={"v": v})


def _block_steps(g: PlaneGraph):
    ext = g.boundary_vertices()
    cuts = set(g.cut_vertices())
    if not cuts:
        return
    for block in sorted(g.blocks(), key=sorted):
        anchors = block & cuts
        if len(anchors) != 1:
            continue  # not a pendant block
        (cut,) = anchors
        body = block - {cut}
        if body & ext:
            continue
        try:
            reduced = delete_vertices(g, body)
        except ReductionError:
            continue
        yield ReductionStep("block", reduced, deleted=tuple(sorted(body)),
                            data={"cut": cut, "block": tuple(sorted(block))})


def _sep_cycle_steps(g: PlaneGraph):
    for c in enumerate_cycles(g, 11):
        if not (c.interior and c.exterior):
            continue
        if classify_cycle(g, c).kind is not CycleKind.GOOD:
            continue
        try:
            reduced = delete_vertices(g, c.interior)
        except ReductionError:
            continue
        yield ReductionStep("sep-cycle", reduced, deleted=tuple(sorted(c.interior)),
                            data={"cycle": c.verts})


def _identify(g2: PlaneGraph, keep: Vertex, absorb: Vertex, ext: frozenset):
    """Identify preferring to keep a boundary vertex; report (graph, report)."""
    if absorb in ext and keep not in ext:
        keep, absorb = absorb, keep
    for f in _faces_containing(g2, keep, absorb):
        try:
            return identify_vertices(g2, keep, absorb, f)
        except IdentificationError:
            continue
    return None


def _hex_tri_steps(g: PlaneGraph):
    ext = g.boundary_vertices()
    for rec in find_hex_tri_edges(g):
        u0, v0 = rec.edge
        hexf = g.faces[rec.hex_face]
        vc = hexf.vertices()
        n = len(vc)
        labelings = []
        for walk in (vc, tuple(reversed(vc))):
            for i in range(n):
                if {walk[i], walk[(i + 1) % n]} == {u0, v0}:
                    labelings.append(tuple(walk[(i + k) % n] for k in range(6)))
        for lab in sorted(set(labelings)):
            u, v, w, x, y, z = lab
            if w in ext:
                continue
            tri = g.faces[rec.tri_face]
            t = next(iter(tri.vertex_set() - {u, v}))
            try:
                reduced1 = delete_vertices(g, {u, v})
            except ReductionError:
                continue
            res = _identify(reduced1, w, y, ext)
            if res is None:
                continue
            reduced, merge = res
            expected = {edge_key(w, x), edge_key(y, x)}
            if merge.merged is None or set(merge.merged) != expected:
                continue
            yield ReductionStep(
                "hex-tri-edge", reduced, deleted=(u, v),
                identified=(merge.kept, merge.absorbed), merged=merge.merged,
                data={"u": u, "v": v, "w": w, "x": x, "y": y, "z": z, "t": t})


def _tetrad_candidates(g: PlaneGraph):
    ext = g.boundary_vertices()
    for t in find_weak_tetrads(g):
        f = g.faces[t.face_index]
        v1, v2, v3, v4, v5 = t.path
        verts = f.vertices()
        n = len(verts)
        v0 = None
        for walk in (verts, tuple(reversed(verts))):
            for s in range(n):
                if tuple(walk[(s + k) % n] for k in range(5)) == t.path:
                    v0 = walk[s - 1]
                    break
            if v0 is not None:
                break
        if v0 is None or v0 in t.path:
            continue
        xs = sorted(g.neighbors(v1) & g.neighbors(v2))
        ys = sorted(g.neighbors(v3) & g.neighbors(v4))
        if len(xs) != 1 or len(ys) != 1:
            continue
        x, y = xs[0], ys[0]
        forbidden = set(t.path) | {v0}
        if x in forbidden or y in forbidden or x == y:
            continue
        yield t, v0, x, y


def _tetrad_steps(g: PlaneGraph):
    ext = g.boundary_vertices()
    for t, v0, x, y in _tetrad_candidates(g):
        v1, v2, v3, v4, v5 = t.path
        for extended in (False, True):
            deleted = (v1, v2, v3, v4) if not extended else (v1, v2, v3, v4, v5)
            if extended and (v5 in ext or g.degree(v5) != 3):
                continue
            if any(d in ext for d in deleted):
                continue
            try:
                reduced1 = delete_vertices(g, set(deleted))
            except ReductionError:
                continue
            res = _identify(reduced1, v0, y, ext)
            if res is None:
                continue
            reduced, merge = res
            yield ReductionStep(
                "weak-tetrad", reduced, deleted=deleted,
                identified=(merge.kept, merge.absorbed), merged=merge.merged,
                data={"v0": v0, "v1": v1, "v2": v2, "v3": v3, "v4": v4,
                      "v5": v5, "x": x, "y": y, "extended": extended})


def _common_neighbor(g: PlaneGraph, a: Vertex, b: Vertex) -> Vertex | None:
    common = sorted(g.neighbors(a) & g.neighbors(b))
    return common[0] if len(common) == 1 else None


def _m_face_steps(g: PlaneGraph):
    ext = g.boundary_vertices()
    for rec in find_m_faces(g):
        f = g.faces[rec.face_index]
        for lab in rec.labelings:
            v = (None,) + lab
            ts = {}
            ok = True
            for i, j in ((1, 2), (3, 4), (4, 5), (6, 7)):
                t = _common_neighbor(g, v[i], v[j])
                if t is None:
                    ok = False
                    break
                ts[(i, j)] = t
            if not ok:
                continue
            tvals = list(ts.values())
            if len(set(tvals)) != 4 or any(t in f.vertex_set() for t in tvals):
                continue
            deleted = (v[1], v[2], v[3], v[5], v[6], v[7])
            if any(d in ext for d in deleted):
                continue
            try:
                reduced1 = delete_vertices(g, set(deleted))
            except ReductionError:
                continue
            res = _identify(reduced1, v[4], v[8], ext)
            if res is None:
                continue
            reduced, merge = res
            yield ReductionStep(
                "m-face", reduced, deleted=deleted,
                identified=(merge.kept, merge.absorbed), merged=merge.merged,
                data={f"v{i}": v[i] for i in range(1, 9)}
                | {"t12": ts[(1, 2)], "t34": ts[(3, 4)],
                   "t45": ts[(4, 5)], "t67": ts[(6, 7)]})


def _mm_face_steps(g: PlaneGraph):
    ext = g.boundary_vertices()
    for rec in find_mm_faces(g):
        f = g.faces[rec.face_index]
        for lab in rec.labelings:
            v = (None,) + lab
            ts = {}
            ok = True
            for i, j in ((1, 2), (2, 3), (4, 5), (6, 7), (7, 8)):
                t = _common_neighbor(g, v[i], v[j])
                if t is None:
                    ok = False
                    break
                ts[(i, j)] = t
            if not ok:
                continue
            tvals = list(ts.values())
            if len(set(tvals)) != 5 or any(t in f.vertex_set() for t in tvals):
                continue
            deleted = tuple(v[1:9])
            if any(d in ext for d in deleted):
                continue
            try:
                reduced1 = delete_vertices(g, set(deleted))
            except ReductionError:
                continue
            res = _identify(reduced1, ts[(1, 2)], ts[(6, 7)], ext)
            if res is None:
                continue
            reduced, merge = res
            yield ReductionStep(
                "mm-face", reduced, deleted=deleted,
                identified=(merge.kept, merge.absorbed), merged=merge.merged,
                data={f"v{i}": v[i] for i in range(1, 9)}
                | {"t12": ts[(1, 2)], "t23": ts[(2, 3)], "t45": ts[(4, 5)],
                   "t67": ts[(6, 7)], "t78": ts[(7, 8)]})


_STEP_SOURCES = (
    _deg2_steps, _block_steps, _sep_cycle_steps, _hex_tri_steps,
    _tetrad_steps, _m_face_steps, _mm_face_steps,
)


def find_reduction(g: PlaneGraph,
                   require_good_boundary: bool = True) -> ReductionStep | None:
    """First candidate, in the fixed cheap-to-rich priority order, whose
    safety check passes on its constructed reduced graph."""
    for source in _STEP_SOURCES:
        for step in source(g):
            if safety_check(g, step, require_good_boundary).ok:
                return step
    return None


# -- lifts -------------------------------------------------------------------------

def _admissible(g: PlaneGraph, coloring: Coloring, v: Vertex) -> list[int]:
    taken = {coloring[n] for n in g.neighbors(v) if n in coloring}
    return [c for c in COLORS if c not in taken]


def _pick(g: PlaneGraph, coloring: Coloring, v: Vertex,
          prefer: int | None = None) -> None:
    opts = _admissible(g, coloring, v)
    if not opts:
        raise TheoremViolation(f"lift dead end at {v}")
    if prefer is not None and prefer in opts:
        coloring[v] = prefer
    else:
        coloring[v] = opts[0]


def lift_coloring(g: PlaneGraph, step: ReductionStep,
                  reduced_coloring: Coloring) -> Coloring:
    """Recolor the deleted vertices of a local step by its recipe.  The
    identified pair shares the merged color; only deleted vertices (plus the
    MM recolor triple) are written."""
    coloring = {v: c for v, c in reduced_coloring.items() if g.has_vertex(v)}
    if step.identified is not None:
        kept, absorbed = step.identified
        coloring[absorbed] = reduced_coloring[kept]
    d = step.data
    tag = step.tag

    if tag == "deg2":
        _pick(g, coloring, d["v"])
    elif tag == "hex-tri-edge":
        # v avoids w and t, preferring z's color; then u is forced-safe
        _pick(g, coloring, d["v"], prefer=coloring[d["z"]])
        _pick(g, coloring, d["u"])
    elif tag == "weak-tetrad":
        if d["extended"]:
            _pick(g, coloring, d["v5"])
        _pick(g, coloring, d["v4"])
        _pick(g, coloring, d["v3"])
        _pick(g, coloring, d["v1"], prefer=coloring[d["v3"]])
        _pick(g, coloring, d["v2"])
    elif tag == "m-face":
        c8 = coloring[d["v8"]]
        _pick(g, coloring, d["v3"])
        _pick(g, coloring, d["v2"], prefer=c8)
        _pick(g, coloring, d["v1"])
        _pick(g, coloring, d["v5"])
        _pick(g, coloring, d["v6"], prefer=c8)
        _pick(g, coloring, d["v7"])
    elif tag == "mm-face":
        _lift_mm_face(g, step, coloring)
    else:
        raise ValueError(f"{tag} lifts through recursion, not locally")

    for v in step.deleted:
        assert v in coloring
    if not is_proper(g, coloring):
        raise TheoremViolation(f"improper lift for {tag}")
    return coloring


def _lift_mm_face(g: PlaneGraph, step: ReductionStep, coloring: Coloring) -> None:
    d = step.data
    v = {i: d[f"v{i}"] for i in range(1, 9)}
    alpha = coloring[d["t12"]]           # identified with t67: same color

    # Phase 1 ignores the edge v1-v8: color v2,v1,v3 then v7,v8,v6, steering
    # v7 toward v3's color so v6 can usually avoid it.
    def adm(x, ignore=()):
        taken = {coloring[n] for n in g.neighbors(x)
                 if n in coloring and n not in ignore}
        return [c for c in COLORS if c not in taken]

    def pick(x, prefer=None, avoid=None, ignore=()):
        opts = adm(x, ignore)
        if not opts:
            raise TheoremViolation(f"lift dead end at {x}")
        if prefer is not None and prefer in opts:
            coloring[x] = prefer
            return
        if avoid is not None:
            keep = [c for c in opts if c != avoid]
            if keep:
                coloring[x] = keep[0]
                return
        coloring[x] = opts[0]

    pick(v[2])
    pick(v[1], ignore=(v[8],))
    pick(v[3])
    pick(v[7], prefer=coloring[v[3]])
    pick(v[8], ignore=(v[1],))
    pick(v[6], avoid=coloring[v[3]])

    if coloring[v[1]] == coloring[v[8]]:
        # the recolor branch: beta on v1/v8 forces t78 = alpha; swap the right side
        beta = coloring[v[1]]
        gamma = next(c for c in COLORS if c not in (alpha, beta))
        if coloring[d["t78"]] != alpha:
            raise TheoremViolation("mm-face recolor premise failed")
        coloring[v[8]] = gamma
        coloring[v[7]] = beta
        coloring[v[6]] = gamma
    elif coloring[v[3]] == coloring[v[6]]:
        # mirrored branch: v8 is forced to alpha here; rebuild the left side
        delta = coloring[v[3]]
        rho = coloring[v[7]]
        t23 = coloring[d["t23"]]
        if coloring[v[8]] != alpha or delta == alpha:
            raise TheoremViolation("mm-face mirror premise failed")
        v3new = next(c for c in (alpha, rho) if c != t23)
        coloring[v[3]] = v3new
        coloring[v[2]] = delta
        coloring[v[1]] = rho

    pick(v[4], prefer=coloring[v[6]])
    pick(v[5])


# -- the proof-guided driver ---------------------------------------------------------

@dataclass
class ProofStats:
    steps: dict[str, int] = field(default_factory=dict)
    fallbacks: int = 0

    def bump(self, tag: str) -> None:
        self.steps[tag] = self.steps.get(tag, 0) + 1

    def format(self) -> str:
        parts = [f"{STAT_LABELS[t]}:{self.steps.get(t, 0)}"
                 for t in STAT_LABELS]
        parts.append(f"fallback:{self.fallbacks}")
        return "steps{" + ",".join(parts) + "}"


def color_proof_guided(g: PlaneGraph, phi: Coloring) -> tuple[Coloring, ProofStats]:
    """Extend phi to all of g by reductions, falling back to the oracle where
    no reduction is safe.  Raises TheoremViolation if a class instance with a
    good boundary refuses to extend."""
    rep = in_class(g)
    if not rep.ok:
        raise PreconditionError(f"not a class member: {rep.violation}")
    cyc = g.boundary_cycle()
    if cyc is None:
        raise PreconditionError("boundary walk is not a cycle")
    if classify_cycle(g, sides_of_cycle(g, cyc)).kind is not CycleKind.GOOD:
        raise PreconditionError("boundary cycle is not good")
    stats = ProofStats()
    coloring = _solve(g, dict(phi), stats)
    assert is_proper(g, coloring)
    assert all(coloring[v] == phi[v] for v in phi)
    return coloring, stats


def _solve(g: PlaneGraph, phi: Coloring, stats: ProofStats) -> Coloring:
    if all(v in phi for v in g.vertices):
        if not is_proper(g, phi):
            raise TheoremViolation("boundary coloring clashes on a chord")
        return dict(phi)
    step = find_reduction(g)
    if step is None:
        stats.fallbacks += 1
        result = extend_backtrack(g, phi)
        if result is None:
            raise TheoremViolation("unextendable class instance with good boundary")
        return result
    stats.bump(step.tag)
    if step.tag == "block":
        sub_coloring = _solve(step.reduced, phi, stats)
        block_graph = sub_plane_graph(g, step.data["block"])
        cut = step.data["cut"]
        block_coloring = solve_coloring(block_graph, {cut: sub_coloring[cut]})
        if block_coloring is None:
            raise TheoremViolation("pendant block refused a 3-coloring")
        return sub_coloring | block_coloring
    if step.tag == "sep-cycle":
        outer_coloring = _solve(step.reduced, phi, stats)
        cyc = step.data["cycle"]
        inner_graph = sub_plane_graph(g, set(cyc) | set(step.deleted))
        inner_phi = {v: outer_coloring[v] for v in inner_graph.boundary_vertices()}
        inner_coloring = _solve(inner_graph, inner_phi, stats)
        return outer_coloring | inner_coloring
    reduced_coloring = _solve(step.reduced, phi, stats)
    return lift_coloring(g, step, reduced_coloring)
