"""Instance builders.

Named instances reproduce the structures the detectors and reductions are
specified against (counterexample pair, claw/biclaw/triclaw/combclaw
witnesses, M-/MM-face, weak tetrad, 6/3-edge, separating cycle, pendant
block).  Rotation systems for the hand-built instances are derived from a
straight-line drawing; the library itself never sees coordinates.

random_class_graph grows a class member inside a good chordless boundary by
attaching interior paths, pendant triangles, and pendant vertices, rejecting
any attachment that creates a 4-/5-cycle, an ext-triangular 7-cycle, a
boundary chord, or a bad boundary.
"""

from __future__ import annotations

import math
import random
from typing import Iterable

from .plane_graph import PlaneGraph, Vertex, edge_key, sides_of_cycle
from .structures import CycleKind, classify_cycle, in_class


# -- embedding helper -----------------------------------------------------------

def _build(edges: Iterable[tuple[Vertex, Vertex]],
           pos: dict[Vertex, tuple[float, float]],
           outer: tuple[Vertex, Vertex]) -> PlaneGraph:
    """Rotations from a straight-line drawing: neighbors sorted clockwise from
    north (ascending compass bearing)."""
    adj: dict[Vertex, list[Vertex]] = {v: [] for v in pos}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    rot = {}
    for v, nbrs in adj.items():
        x0, y0 = pos[v]

        def bearing(n):
            dx, dy = pos[n][0] - x0, pos[n][1] - y0
            return math.atan2(dx, dy) % (2 * math.pi)

        rot[v] = tuple(sorted(nbrs, key=bearing))
    return PlaneGraph(rot, outer)


def _ring(names: list[Vertex], radius: float = 1.0,
          start_deg: float = 0.0) -> dict[Vertex, tuple[float, float]]:
    """Positions on a circle, clockwise starting at the given bearing."""
    n = len(names)
    pos = {}
    for k, name in enumerate(names):
        a = math.radians(start_deg + 360.0 * k / n)
        pos[name] = (radius * math.sin(a), radius * math.cos(a))
    return pos


def _at(deg: float, radius: float) -> tuple[float, float]:
    a = math.radians(deg)
    return (radius * math.sin(a), radius * math.cos(a))


def _cycle_edges(names: list[Vertex]) -> list[tuple[Vertex, Vertex]]:
    return [(names[i], names[(i + 1) % len(names)]) for i in range(len(names))]


# -- elementary and paper instances ----------------------------------------------

def cycle_graph(n: int) -> PlaneGraph:
    if not 3 <= n <= 64:
        raise ValueError("cycle length must be between 3 and 64")
    names = [f"v{i}" for i in range(1, n + 1)]
    rot = {names[i]: (names[(i - 1) % n], names[(i + 1) % n]) for i in range(n)}
    return PlaneGraph(rot, (names[0], names[-1]))


def _cycle_with_interior(n: int, attachments: dict[Vertex, tuple[tuple[float, float], list[Vertex]]],
                         extra_edges: list[tuple[Vertex, Vertex]] = ()) -> PlaneGraph:
    names = [f"v{i}" for i in range(1, n + 1)]
    pos = _ring(names)
    edges = _cycle_edges(names)
    for name, (p, nbrs) in attachments.items():
        pos[name] = p
        edges.extend((name, m) for m in nbrs)
    edges.extend(extra_edges)
    return _build(edges, pos, (names[0], names[1]))


def centroid(pos, names, scale=1.0):
    xs = [pos[n][0] for n in names]
    ys = [pos[n][1] for n in names]
    return (scale * sum(xs) / len(xs), scale * sum(ys) / len(ys))


def g1() -> PlaneGraph:
    """12-cycle with one inner vertex joined to v1, v2, v6."""
    pos = _ring([f"v{i}" for i in range(1, 13)])
    return _cycle_with_interior(
        12, {"u": (centroid(pos, ("v1", "v2", "v6"), 0.75), ["v1", "v2", "v6"])})


def g2() -> PlaneGraph:
    """12-cycle with an inner triangle joined to v1, v4, v7."""
    pos = _ring([f"v{i}" for i in range(1, 13)])
    att = {
        "u1": (centroid(pos, ("v1",), 0.4), ["v1"]),
        "u2": (centroid(pos, ("v4",), 0.4), ["v4"]),
        "u3": (centroid(pos, ("v7",), 0.4), ["v7"]),
    }
    return _cycle_with_interior(
        12, att, extra_edges=[("u1", "u2"), ("u2", "u3"), ("u3", "u1")])


def claw9() -> PlaneGraph:
    """9-cycle with a (3,6,6)-claw: w joined to v1, v2, v6."""
    pos = _ring([f"v{i}" for i in range(1, 10)])
    return _cycle_with_interior(
        9, {"w": (centroid(pos, ("v1", "v2", "v6"), 0.75), ["v1", "v2", "v6"])})


def claw_368() -> PlaneGraph:
    """11-cycle with a (3,6,8)-claw: w joined to v1, v2, v6."""
    pos = _ring([f"v{i}" for i in range(1, 12)])
    return _cycle_with_interior(
        11, {"w": (centroid(pos, ("v1", "v2", "v6"), 0.75), ["v1", "v2", "v6"])})


def biclaw_3666() -> PlaneGraph:
    """11-cycle with a (3,6,6,6)-biclaw (3-cell at an end)."""
    pos = _ring([f"v{i}" for i in range(1, 12)])
    att = {
        "a": (centroid(pos, ("v1", "v2"), 0.62), ["v1", "v2"]),
        "b": (centroid(pos, ("v5", "v9"), 0.45), ["v5", "v9"]),
    }
    return _cycle_with_interior(11, att, extra_edges=[("a", "b")])


def biclaw_6366() -> PlaneGraph:
    """11-cycle with a (6,3,6,6)-biclaw (3-cell in the middle, shared foot)."""
    pos = _ring([f"v{i}" for i in range(1, 12)])
    att = {
        "a": (centroid(pos, ("v1", "v5"), 0.55), ["v1", "v5"]),
        "b": (centroid(pos, ("v5", "v9"), 0.55), ["v5", "v9"]),
    }
    return _cycle_with_interior(11, att, extra_edges=[("a", "b")])


def triclaw_3666() -> PlaneGraph:
    """9-cycle with a (3,6,6,6)-triclaw: inner triangle legged to v1, v4, v7."""
    pos = _ring([f"v{i}" for i in range(1, 10)])
    att = {
        "a": (centroid(pos, ("v1",), 0.4), ["v1"]),
        "b": (centroid(pos, ("v4",), 0.4), ["v4"]),
        "c": (centroid(pos, ("v7",), 0.4), ["v7"]),
    }
    return _cycle_with_interior(
        9, att, extra_edges=[("a", "b"), ("b", "c"), ("c", "a")])


def triclaw_3668() -> PlaneGraph:
    """11-cycle with a (3,6,6,8)-triclaw: legs at v1, v4, v7."""
    pos = _ring([f"v{i}" for i in range(1, 12)])
    att = {
        "a": (centroid(pos, ("v1",), 0.4), ["v1"]),
        "b": (centroid(pos, ("v4",), 0.4), ["v4"]),
        "c": (centroid(pos, ("v7",), 0.4), ["v7"]),
    }
    return _cycle_with_interior(
        11, att, extra_edges=[("a", "b"), ("b", "c"), ("c", "a")])


def combclaw_36666() -> PlaneGraph:
    """11-cycle with a (3,6,6,6,6)-combclaw: fork x on v1/v8, triangle u-v-w
    with v legged to v3 and w legged to v6."""
    pos = _ring([f"v{i}" for i in range(1, 12)])
    fork_dir = 294.5  # between v8 and v1, through the fork-cell arc
    att = {
        "x": (_at(fork_dir, 0.55), ["v1", "v8"]),
        "u": (_at(fork_dir, 0.22), []),
        "v": (centroid(pos, ("v3",), 0.38), ["v3"]),
        "w": (centroid(pos, ("v6",), 0.38), ["v6"]),
    }
    return _cycle_with_interior(
        11, att,
        extra_edges=[("u", "v"), ("v", "w"), ("w", "u"), ("u", "x")])


def four_vertex_instance() -> PlaneGraph:
    """15-cycle plus an internal 4-vertex on two triangles (z to v1,v2,v9,v10).
    The two non-triangle faces at z have sizes 9 and 8, so no 7-cycle arises."""
    pos = _ring([f"v{i}" for i in range(1, 16)])
    return _cycle_with_interior(
        15, {"z": (centroid(pos, ("v1", "v2", "v9", "v10"), 0.55),
                   ["v1", "v2", "v9", "v10"])})


# -- face-pattern instances -------------------------------------------------------

def _with_outer_hexagon(pos, edges, hook: Vertex, hook_deg: float):
    """Wrap an instance with a hexagonal boundary linked by one pendant path."""
    pos = dict(pos)
    pos["p1"] = _at(hook_deg, 1.95)
    hexa = [f"d{i}" for i in range(1, 7)]
    pos.update(_ring(hexa, radius=2.6, start_deg=hook_deg))
    edges = list(edges) + [(hook, "p1"), ("p1", "d1")] + _cycle_edges(hexa)
    return _build(edges, pos, ("d1", "d2"))


def _apexes(pos, edges, spec: dict) -> None:
    for t, (a, b) in spec.items():
        mid = centroid(pos, (a, b))
        ang = math.degrees(math.atan2(mid[0], mid[1]))
        pos[t] = _at(ang, 1.45)
        edges += [(t, a), (t, b)]


def m_face_instance() -> PlaneGraph:
    """An internal 8-face matching the M pattern: v1,v2,v3,v5,v6,v7 of degree 3
    and v1v2, v3v4, v4v5, v6v7 triangular.  The apexes that would be orphaned
    by the reduction (t12, t67) and the free corner v8 are hooked to a
    hexagonal boundary; hook spacing keeps every cycle class-legal."""
    oct_names = [f"v{i}" for i in range(1, 9)]
    pos = _ring(oct_names)
    edges = _cycle_edges(oct_names)
    _apexes(pos, edges, {"t12": ("v1", "v2"), "t34": ("v3", "v4"),
                         "t45": ("v4", "v5"), "t67": ("v6", "v7")})
    ring = [f"d{i}" for i in range(1, 9)]
    pos.update(_ring(ring, radius=2.7, start_deg=22.5))   # d1@22.5, step 45
    pos["q12"] = _at(22.5, 2.0)
    pos["q4"] = _at(123.0, 2.0)
    pos["q8"] = _at(303.0, 2.0)
    pos["q67"] = _at(268.0, 2.0)
    edges += [("t12", "q12"), ("q12", "d1"),
              ("v4", "q4"), ("q4", "d3"),
              ("v8", "q8"), ("q8", "d7"),
              ("t67", "q67"), ("q67", "d7")]
    edges += _cycle_edges(ring)
    return _build(edges, pos, ("d1", "d2"))


def mm_face_instance() -> PlaneGraph:
    """An internal 8-face matching the MM pattern: v2, v7 of degree 4, the rest
    of degree 3, and v1v2, v2v3, v4v5, v6v7, v7v8 triangular.  All five apexes
    are hooked to a 7-gon boundary (shared feet where the arithmetic needs a
    6-cycle, spaced feet elsewhere)."""
    oct_names = [f"v{i}" for i in range(1, 9)]
    pos = _ring(oct_names)
    edges = _cycle_edges(oct_names)
    _apexes(pos, edges, {"t12": ("v1", "v2"), "t23": ("v2", "v3"),
                         "t45": ("v4", "v5"), "t67": ("v6", "v7"),
                         "t78": ("v7", "v8")})
    ring = [f"d{i}" for i in range(1, 8)]
    pos.update(_ring(ring, radius=2.7, start_deg=22.0))   # d1@22, step 360/7
    pos["q12"] = _at(22.0, 2.0)
    pos["q23"] = _at(95.0, 2.05)
    pos["q45"] = _at(167.0, 2.0)
    pos["q67"] = _at(237.0, 2.0)
    pos["q78"] = _at(310.0, 2.05)
    edges += [("t12", "q12"), ("q12", "d1"), ("t23", "q23"), ("q23", "d3"),
              ("t45", "q45"), ("q45", "d4"),
              ("t67", "q67"), ("q67", "d5"), ("t78", "q78"), ("q78", "d7")]
    edges += _cycle_edges(ring)
    return _build(edges, pos, ("d1", "d2"))


def tetrad_instance() -> PlaneGraph:
    """A 9-face carrying one weak tetrad (triangles on v1v2 and v3v4, v1..v4
    internal 3-vertices, v5 an internal 3-vertex).  Both triangle apexes are
    hooked to the hexagonal boundary so the tetrad reduction stays connected."""
    ring = [f"v{i}" for i in range(1, 10)]
    pos = _ring(ring)
    edges = _cycle_edges(ring)
    _apexes(pos, edges, {"x": ("v1", "v2"), "y": ("v3", "v4")})
    pos["z5"] = _at(160.0, 1.45)  # third neighbor of v5, outside the 9-gon
    edges.append(("v5", "z5"))
    pos["p1"] = _at(20.0, 1.95)
    pos["q1"] = _at(85.0, 1.95)
    pos["r1"] = _at(225.0, 1.95)  # keeps v5..v9 attached once v1..v4 go
    hexa = [f"d{i}" for i in range(1, 7)]
    pos.update(_ring(hexa, radius=2.6, start_deg=20.0))  # d1@20, d2@80, d4@200
    edges += [("x", "p1"), ("p1", "d1"), ("y", "q1"), ("q1", "d2"),
              ("v7", "r1"), ("r1", "d4")]
    edges += _cycle_edges(hexa)
    return _build(edges, pos, ("d1", "d2"))


def hex_edge_instance() -> PlaneGraph:
    """An edge u-v on a 6-face and a 3-face with u, v internal 3-vertices (the
    6/3-edge reduction pattern).  The boundary is a 15-cycle; every internal
    vertex has degree 3."""
    rim = ["x", "y", "z", "p1", "p2", "p3", "t", "q1", "r1",
           "s1", "s2", "s3", "r2", "u1", "u2"]
    pos = _ring(rim, radius=2.5)
    pos.update({
        "u": _at(58.0, 0.75),
        "v": _at(26.0, 0.45),
        "w": _at(0.0, 0.65),
        "w2": _at(288.0, 1.1),
    })
    edges = _cycle_edges(rim)
    edges += [("u", "v"), ("v", "w"), ("w", "x"), ("z", "u")]     # hexagon u-v-w-x-y-z
    edges += [("t", "u"), ("t", "v")]                             # pendant triangle
    edges += [("w", "w2"), ("w2", "r1"), ("w2", "r2")]            # inner helper
    return _build(edges, pos, ("x", "y"))


def sep_cycle_instance() -> PlaneGraph:
    """A separating good hexagon: boundary hexagon, inner hexagon joined by one
    edge, pendant vertex inside the inner hexagon."""
    outer = [f"d{i}" for i in range(1, 7)]
    inner = [f"h{i}" for i in range(1, 7)]
    pos = _ring(outer, radius=2.0)
    pos.update(_ring(inner, radius=1.0))
    pos["p"] = _at(180.0, 0.3)
    edges = _cycle_edges(outer) + _cycle_edges(inner)
    edges += [("d1", "h1"), ("h4", "p")]
    return _build(edges, pos, ("d1", "d2"))


def block_instance() -> PlaneGraph:
    """A pendant triangle block behind a cut vertex inside a hexagon boundary."""
    outer = [f"d{i}" for i in range(1, 7)]
    pos = _ring(outer, radius=2.0)
    pos["c"] = _at(0.0, 1.0)
    pos["c2"] = _at(150.0, 0.6)
    pos["c3"] = _at(210.0, 0.6)
    edges = _cycle_edges(outer)
    edges += [("d1", "c"), ("c", "c2"), ("c", "c3"), ("c2", "c3")]
    return _build(edges, pos, ("d1", "d2"))


# -- random class members -----------------------------------------------------------

def _corner_insert(rot: dict[Vertex, tuple[Vertex, ...]], v: Vertex,
                   before: Vertex, new: Vertex) -> None:
    nbrs = list(rot[v])
    nbrs.insert(nbrs.index(before), new)
    rot[v] = tuple(nbrs)


def _new_cycles_ok(g: PlaneGraph, new_edges: list[tuple[Vertex, Vertex]]) -> bool:
    """No new 4-/5-cycle and no new ext-triangular 7-cycle through new edges
    (including 7-cycles made ext-triangular by a new triangle)."""
    probe = set()
    for a, b in new_edges:
        probe.add(edge_key(a, b))
    # paths b -> a of length <= 6 avoiding the probed edge give its cycles
    tri_edges: set = set()
    cycles: set = set()

    def cycles_through(ek) -> None:
        a, b = ek
        stack = [(b, (b,))]
        while stack:
            v, path = stack.pop()
            used = set(path)
            for w in sorted(g.neighbors(v)):
                if w == a and len(path) >= 2:
                    cyc = (a,) + path
                    cycles.add(min(tuple(cyc), tuple(reversed(cyc))))
                elif w not in used and w != a and len(path) < 6:
                    stack.append((w, path + (w,)))

    for ek in sorted(probe):
        cycles_through(ek)
    for cyc in cycles:
        if len(cyc) in (4, 5):
            return False
        if len(cyc) == 3:
            tri_edges.update(
                edge_key(cyc[i], cyc[(i + 1) % 3]) for i in range(3))
    # ext-triangularity can newly involve 7-cycles through new-triangle edges
    for ek in sorted(tri_edges - probe):
        cycles_through(ek)
    for cyc in sorted(cycles):
        if len(cyc) == 7:
            from .structures import is_ext_triangular
            ref = sides_of_cycle(g, cyc)
            if is_ext_triangular(g, ref)[0]:
                return False
    return True


def _boundary_ok(g: PlaneGraph) -> bool:
    bverts = g.boundary_cycle()
    if bverts is None:
        return False
    on = set(bverts)
    for u, v in g.edges():
        if u in on and v in on and edge_key(u, v) not in sides_of_cycle(g, bverts).edge_set():
            return False  # boundary chord
    d = sides_of_cycle(g, bverts)
    return classify_cycle(g, d).kind is CycleKind.GOOD


def _try_grow(g: PlaneGraph, rng: random.Random, fresh: int) -> PlaneGraph | None:
    internal_faces = [f for f in g.faces if not f.is_outer and f.size >= 6]
    if not internal_faces:
        return None
    f = rng.choice(sorted(internal_faces, key=lambda x: x.boundary))
    walk = f.boundary
    n = len(walk)
    bverts = set(g.outer_face.vertex_set())
    op = rng.choices(("path", "triangle", "pendant"), weights=(6, 3, 1))[0]
    rot = {v: g.rotation[v] for v in g.rotation}
    new_edges: list[tuple[Vertex, Vertex]] = []

    if op == "pendant":
        pos = rng.randrange(n)
        v, y = walk[pos]
        name = f"x{fresh}"
        _corner_insert(rot, v, y, name)
        rot[name] = (v,)
        new_edges.append((v, name))
    elif op == "triangle":
        pos = rng.randrange(n)
        u, v = walk[pos]
        y2 = walk[(pos + 1) % n][1]
        name = f"x{fresh}"
        _corner_insert(rot, u, v, name)
        _corner_insert(rot, v, y2, name)
        rot[name] = (u, v)
        new_edges += [(u, name), (v, name)]
    else:
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i == j or walk[i][0] == walk[j][0]:
            return None
        a, ya = walk[i]
        b, yb = walk[j]
        length = rng.choice((1, 2, 2, 3, 3, 4))
        gap = (j - i) % n
        s1, s2 = gap + length, (n - gap) + length
        if s1 in (4, 5) or s2 in (4, 5) or s1 < 3 or s2 < 3:
            return None
        if length == 1:
            if g.adjacent(a, b) or (a in bverts and b in bverts):
                return None
            _corner_insert(rot, a, ya, b)
            _corner_insert(rot, b, yb, a)
            new_edges.append((a, b))
        else:
            mids = [f"x{fresh + k}" for k in range(length - 1)]
            chain = [a] + mids + [b]
            _corner_insert(rot, a, ya, mids[0])
            _corner_insert(rot, b, yb, mids[-1])
            for k, m in enumerate(mids):
                rot[m] = (chain[k], chain[k + 2])
            for k in range(length):
                new_edges.append((chain[k], chain[k + 1]))

    try:
        cand = PlaneGraph(rot, g.outer_edge)
    except Exception:
        return None
    if not _new_cycles_ok(cand, new_edges):
        return None
    if any(u in bverts and v in bverts for u, v in new_edges):
        return None
    touches_boundary = any(u in bverts or v in bverts for u, v in new_edges)
    if touches_boundary and not _boundary_ok(cand):
        return None
    return cand


def random_class_graph(seed: int, max_n: int = 22) -> PlaneGraph:
    """Deterministic class member with a good chordless boundary cycle."""
    rng = random.Random(seed)
    n0 = rng.randint(6, min(11, max(6, max_n)))
    g = cycle_graph(n0)
    target = rng.randint(n0, max(n0, max_n))
    fresh = 0
    attempts = 0
    while g.vertex_count < target and attempts < 150:
        attempts += 1
        g2 = _try_grow(g, rng, fresh)
        if g2 is not None:
            fresh += g2.vertex_count - g.vertex_count + 2
            g = g2
    assert in_class(g).ok and _boundary_ok(g)
    return g


GENERATORS = {
    "cycle": cycle_graph,
    "g1": g1,
    "g2": g2,
    "claw9": claw9,
    "claw368": claw_368,
    "biclaw3666": biclaw_3666,
    "biclaw6366": biclaw_6366,
    "triclaw3666": triclaw_3666,
    "triclaw3668": triclaw_3668,
    "combclaw36666": combclaw_36666,
    "fourvertex": four_vertex_instance,
    "mface": m_face_instance,
    "mmface": mm_face_instance,
    "tetrad": tetrad_instance,
    "hexedge": hex_edge_instance,
    "sepcycle": sep_cycle_instance,
    "block": block_instance,
    "random-class": random_class_graph,
}
