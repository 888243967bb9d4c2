"""Combinatorial plane graphs given by rotation systems.

A plane graph is a simple connected graph plus, for every vertex, the clockwise
cyclic order of its neighbors, and a designated outer face.  Faces are traced
combinatorially: the walk successor of a directed edge (u, v) is (v, w) where w
follows u in the rotation at v.  Everything downstream (interior/exterior of a
cycle, structure detection, discharging) reads only this data; there are no
coordinates anywhere in the library.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

Vertex = str
DirEdge = tuple[str, str]
Edge = tuple[str, str]  # sorted pair


class PlaneGraphError(Exception):
    """Base class for all errors raised by this package."""


class GraphInputError(PlaneGraphError):
    """Structurally invalid input: bad rotation system, parse error, ..."""


class InvalidCycleError(PlaneGraphError):
    """A vertex sequence that is not a cycle of the graph."""


class ReductionError(PlaneGraphError):
    """An edit operation whose result would not be a valid plane graph."""


class IdentificationError(PlaneGraphError):
    """Vertex identification violates its preconditions or would be unsafe."""


def edge_key(u: Vertex, v: Vertex) -> Edge:
    return (u, v) if u <= v else (v, u)


def _cyclic_min(seq: Sequence) -> tuple:
    """Lexicographically minimal rotation of a cyclic sequence."""
    n = len(seq)
    doubled = tuple(seq) + tuple(seq)
    return min(tuple(doubled[i:i + n]) for i in range(n))


@dataclass(frozen=True)
class FaceWalk:
    """One face of the embedding: a closed walk of directed edges.

    The boundary is stored rotated so its smallest directed edge comes first,
    which makes face identity stable across retracings.  In a 2-connected graph
    every boundary is a cycle; with bridges a walk may revisit vertices.
    """

    boundary: tuple[DirEdge, ...]
    is_outer: bool = False

    @property
    def size(self) -> int:
        return len(self.boundary)

    def vertices(self) -> tuple[Vertex, ...]:
        return tuple(u for u, _ in self.boundary)

    def vertex_set(self) -> frozenset:
        return frozenset(u for u, _ in self.boundary)

    def edge_set(self) -> frozenset:
        return frozenset(edge_key(u, v) for u, v in self.boundary)

    def corners(self) -> list[tuple[Vertex, Edge, Edge]]:
        """(vertex, flanking edge, flanking edge) per boundary occurrence."""
        out = []
        n = len(self.boundary)
        for i, (v, w) in enumerate(self.boundary):
            p = self.boundary[i - 1][0]
            out.append((v, edge_key(p, v), edge_key(v, w)))
        return out

    def __repr__(self) -> str:
        tag = "outer " if self.is_outer else ""
        return f"FaceWalk({tag}{'-'.join(self.vertices())})"


@dataclass(frozen=True)
class CycleRef:
    """A cycle together with the vertex sets strictly inside and outside it."""

    verts: tuple[Vertex, ...]
    interior: frozenset
    exterior: frozenset

    def __len__(self) -> int:
        return len(self.verts)

    def edge_set(self) -> frozenset:
        n = len(self.verts)
        return frozenset(edge_key(self.verts[i], self.verts[(i + 1) % n]) for i in range(n))

    def canonical(self) -> tuple[Vertex, ...]:
        return min(_cyclic_min(self.verts), _cyclic_min(tuple(reversed(self.verts))))

    def __repr__(self) -> str:
        return f"CycleRef({'-'.join(self.verts)})"


@dataclass(frozen=True)
class MergeReport:
    """Outcome of a vertex identification: kept/absorbed names and the merged
    edge pair, if the operation fused two parallel edges into one."""

    kept: Vertex
    absorbed: Vertex
    merged: tuple[Edge, Edge] | None


def _trace_walks(rotation: Mapping[Vertex, tuple[Vertex, ...]]) -> list[tuple[DirEdge, ...]]:
    succ: dict[Vertex, dict[Vertex, Vertex]] = {}
    for v, nbrs in rotation.items():
        k = len(nbrs)
        succ[v] = {nbrs[i]: nbrs[(i + 1) % k] for i in range(k)}
    remaining = {(u, v) for u, nbrs in rotation.items() for v in nbrs}
    walks = []
    while remaining:
        start = min(remaining)
        walk = []
        e = start
        while True:
            walk.append(e)
            remaining.discard(e)
            u, v = e
            e = (v, succ[v][u])
            if e == start:
                break
        walks.append(_cyclic_min(walk))
    return walks


class PlaneGraph:
    """Immutable plane graph.  Edit operations return new graphs."""

    def __init__(self, rotation: Mapping[Vertex, Sequence[Vertex]], outer: DirEdge):
        rot = {str(v): tuple(str(n) for n in nbrs) for v, nbrs in rotation.items()}
        if len(rot) < 3:
            raise GraphInputError("a plane graph needs at least 3 vertices")
        for v, nbrs in rot.items():
            if v in nbrs:
                raise GraphInputError(f"loop at vertex {v}")
            if len(set(nbrs)) != len(nbrs):
                raise GraphInputError(f"parallel edge in rotation of {v}")
            for n in nbrs:
                if n not in rot:
                    raise GraphInputError(f"rotation of {v} names unknown vertex {n}")
        for v, nbrs in rot.items():
            for n in nbrs:
                if v not in rot[n]:
                    raise GraphInputError(f"asymmetric adjacency {v}-{n}")
        self.rotation = rot
        self._adj = {v: frozenset(nbrs) for v, nbrs in rot.items()}
        self._check_connected()

        walks = _trace_walks(rot)
        edge_count = sum(len(n) for n in rot.values()) // 2
        if len(rot) - edge_count + len(walks) != 2:
            raise GraphInputError(
                "rotation system is not a planar embedding (Euler count failed)")
        outer = (str(outer[0]), str(outer[1]))
        if outer[1] not in self._adj.get(outer[0], frozenset()):
            raise GraphInputError(f"outer designation {outer} is not a directed edge")
        faces = []
        outer_face = None
        for w in sorted(walks):
            is_outer = outer in w
            f = FaceWalk(boundary=w, is_outer=is_outer)
            if is_outer:
                outer_face = f
            faces.append(f)
        assert outer_face is not None
        self.faces: tuple[FaceWalk, ...] = tuple(faces)
        self.outer_face: FaceWalk = outer_face
        self.outer_edge: DirEdge = outer_face.boundary[0]
        self._face_of_dir: dict[DirEdge, int] = {}
        for i, f in enumerate(self.faces):
            for e in f.boundary:
                self._face_of_dir[e] = i

    # -- basic queries ----------------------------------------------------

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return tuple(sorted(self.rotation))

    @property
    def vertex_count(self) -> int:
        return len(self.rotation)

    @property
    def edge_count(self) -> int:
        return sum(len(n) for n in self.rotation.values()) // 2

    def edges(self) -> list[Edge]:
        return sorted({edge_key(u, v) for u, nbrs in self.rotation.items() for v in nbrs})

    def neighbors(self, v: Vertex) -> frozenset:
        return self._adj[v]

    def degree(self, v: Vertex) -> int:
        return len(self.rotation[v])

    def adjacent(self, u: Vertex, v: Vertex) -> bool:
        return v in self._adj[u]

    def has_vertex(self, v: Vertex) -> bool:
        return v in self.rotation

    def face_index(self, face: FaceWalk) -> int:
        return self.faces.index(face)

    def face_of_directed(self, e: DirEdge) -> FaceWalk:
        return self.faces[self._face_of_dir[e]]

    def faces_of_edge(self, u: Vertex, v: Vertex) -> tuple[FaceWalk, FaceWalk]:
        return self.face_of_directed((u, v)), self.face_of_directed((v, u))

    def boundary_vertices(self) -> frozenset:
        return self.outer_face.vertex_set()

    def internal_vertices(self) -> list[Vertex]:
        ext = self.boundary_vertices()
        return [v for v in self.vertices if v not in ext]

    def boundary_cycle(self) -> tuple[Vertex, ...] | None:
        """The outer walk as a cycle, or None if it revisits a vertex."""
        verts = self.outer_face.vertices()
        return verts if len(set(verts)) == len(verts) else None

    # -- structural helpers ------------------------------------------------

    def _check_connected(self) -> None:
        start = next(iter(self._adj))
        seen = {start}
        stack = [start]
        while stack:
            for n in self._adj[stack.pop()]:
                if n not in seen:
                    seen.add(n)
                    stack.append(n)
        if len(seen) != len(self._adj):
            raise GraphInputError("graph is not connected")

    def cut_vertices(self) -> list[Vertex]:
        """Articulation points (iterative Tarjan)."""
        order = sorted(self.rotation)
        disc: dict[Vertex, int] = {}
        low: dict[Vertex, int] = {}
        parent: dict[Vertex, Vertex | None] = {}
        cuts: set[Vertex] = set()
        counter = 0
        for root in order:
            if root in disc:
                continue
            parent[root] = None
            stack = [(root, iter(sorted(self._adj[root])))]
            disc[root] = low[root] = counter
            counter += 1
            root_children = 0
            while stack:
                v, it = stack[-1]
                advanced = False
                for w in it:
                    if w not in disc:
                        parent[w] = v
                        if v == root:
                            root_children += 1
                        disc[w] = low[w] = counter
                        counter += 1
                        stack.append((w, iter(sorted(self._adj[w]))))
                        advanced = True
                        break
                    elif w != parent[v]:
                        low[v] = min(low[v], disc[w])
                if not advanced:
                    stack.pop()
                    p = parent[v]
                    if p is not None:
                        low[p] = min(low[p], low[v])
                        if p != root and low[v] >= disc[p]:
                            cuts.add(p)
            if root_children > 1:
                cuts.add(root)
        return sorted(cuts)

    def is_2connected(self) -> bool:
        return self.vertex_count >= 3 and not self.cut_vertices()

    def blocks(self) -> list[frozenset]:
        """Vertex sets of the biconnected components."""
        disc: dict[Vertex, int] = {}
        low: dict[Vertex, int] = {}
        parent: dict[Vertex, Vertex | None] = {}
        estack: list[Edge] = []
        out: list[frozenset] = []
        counter = 0
        for root in sorted(self.rotation):
            if root in disc:
                continue
            parent[root] = None
            disc[root] = low[root] = counter
            counter += 1
            stack = [(root, iter(sorted(self._adj[root])))]
            while stack:
                v, it = stack[-1]
                advanced = False
                for w in it:
                    if w not in disc:
                        parent[w] = v
                        estack.append(edge_key(v, w))
                        disc[w] = low[w] = counter
                        counter += 1
                        stack.append((w, iter(sorted(self._adj[w]))))
                        advanced = True
                        break
                    elif w != parent[v] and disc[w] < disc[v]:
                        estack.append(edge_key(v, w))
                        low[v] = min(low[v], disc[w])
                if not advanced:
                    stack.pop()
                    p = parent[v]
                    if p is None:
                        continue
                    low[p] = min(low[p], low[v])
                    if low[v] >= disc[p]:
                        block: set[Vertex] = set()
                        while estack:
                            e = estack.pop()
                            block.update(e)
                            if e == edge_key(p, v):
                                break
                        out.append(frozenset(block))
        return out

    # -- identity ----------------------------------------------------------

    def _canon(self) -> tuple:
        rot = tuple((v, _cyclic_min(nbrs)) for v, nbrs in sorted(self.rotation.items()))
        return rot, self.outer_face.boundary

    def __eq__(self, other) -> bool:
        return isinstance(other, PlaneGraph) and self._canon() == other._canon()

    def __hash__(self) -> int:
        return hash(self._canon())

    def __repr__(self) -> str:
        return f"PlaneGraph(V={self.vertex_count}, E={self.edge_count}, F={len(self.faces)})"


# -- face tracing as a standalone operation ---------------------------------

def trace_faces(g: PlaneGraph) -> tuple[FaceWalk, ...]:
    """All faces of g.  Every directed edge lies in exactly one walk and
    sum d(f) = 2E; the constructor has already verified Euler's formula."""
    return g.faces


# -- interior / exterior of a cycle ------------------------------------------

class _DSU:
    def __init__(self, n: int):
        self.p = list(range(n))

    def find(self, x: int) -> int:
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.p[rb] = ra


def _check_cycle(g: PlaneGraph, verts: Sequence[Vertex]) -> tuple[Vertex, ...]:
    verts = tuple(verts)
    if len(verts) < 3:
        raise InvalidCycleError("a cycle needs at least 3 vertices")
    if len(set(verts)) != len(verts):
        raise InvalidCycleError("repeated vertex in cycle")
    for v in verts:
        if not g.has_vertex(v):
            raise InvalidCycleError(f"unknown vertex {v}")
    for i, v in enumerate(verts):
        if not g.adjacent(v, verts[(i + 1) % len(verts)]):
            raise InvalidCycleError(f"{v} and {verts[(i + 1) % len(verts)]} not adjacent")
    return verts


def cycle_face_sides(g: PlaneGraph, verts: Sequence[Vertex]) -> tuple[CycleRef, list[bool]]:
    """CycleRef for verts plus, per face index, whether that face lies on the
    exterior side of the cycle (the side containing the outer face)."""
    verts = _check_cycle(g, verts)
    cyc_edges = {edge_key(verts[i], verts[(i + 1) % len(verts)]) for i in range(len(verts))}
    dsu = _DSU(len(g.faces))
    for u, v in g.edges():
        if (u, v) not in cyc_edges and edge_key(u, v) not in cyc_edges:
            dsu.union(g._face_of_dir[(u, v)], g._face_of_dir[(v, u)])
    outer_root = dsu.find(g.faces.index(g.outer_face))
    is_ext = [dsu.find(i) == outer_root for i in range(len(g.faces))]
    on_cycle = set(verts)
    interior: set[Vertex] = set()
    exterior: set[Vertex] = set()
    for i, f in enumerate(g.faces):
        bucket = exterior if is_ext[i] else interior
        for v in f.vertex_set():
            if v not in on_cycle:
                bucket.add(v)
    if interior & exterior:
        raise InvalidCycleError("vertex sequence does not separate the plane cleanly")
    return CycleRef(verts, frozenset(interior), frozenset(exterior)), is_ext


def sides_of_cycle(g: PlaneGraph, verts: Sequence[Vertex]) -> CycleRef:
    """Partition the remaining vertices into inside/outside of the cycle,
    relative to the designated outer face."""
    return cycle_face_sides(g, verts)[0]


def is_separating(g: PlaneGraph, c: CycleRef) -> bool:
    return bool(c.interior) and bool(c.exterior)


# -- embedding-preserving edits ----------------------------------------------

def sub_plane_graph(g: PlaneGraph, keep: Iterable[Vertex]) -> PlaneGraph:
    """Induced sub-plane-graph on `keep`.  The outer face of the result is the
    face whose region absorbed the original outer face."""
    keep_set = set(keep)
    unknown = keep_set - set(g.rotation)
    if unknown:
        raise ReductionError(f"unknown vertices {sorted(unknown)}")
    if len(keep_set) < 3:
        raise ReductionError("result would have fewer than 3 vertices")
    rot = {}
    for v in keep_set:
        nbrs = tuple(n for n in g.rotation[v] if n in keep_set)
        if not nbrs:
            raise ReductionError(f"vertex {v} would become isolated")
        rot[v] = nbrs

    # Glue the old faces across edges that vanish; the region holding the old
    # outer face tells us which new face is outer.
    dsu = _DSU(len(g.faces))
    for u, v in g.edges():
        if u not in keep_set or v not in keep_set:
            dsu.union(g._face_of_dir[(u, v)], g._face_of_dir[(v, u)])
    outer_root = dsu.find(g.faces.index(g.outer_face))

    walks = _trace_walks(rot)
    outer_edge = None
    for w in walks:
        e0 = w[0]
        if dsu.find(g._face_of_dir[e0]) == outer_root:
            if outer_edge is not None:
                raise ReductionError("outer region split; cannot designate outer face")
            outer_edge = e0
    if outer_edge is None:
        raise ReductionError("could not locate the outer region in the subgraph")
    try:
        return PlaneGraph(rot, outer_edge)
    except GraphInputError as exc:
        raise ReductionError(str(exc)) from exc


def delete_vertices(g: PlaneGraph, remove: Iterable[Vertex]) -> PlaneGraph:
    """Delete a vertex set; rotations of the survivors keep their order."""
    remove_set = set(remove)
    if not remove_set:
        raise ReductionError("empty deletion set")
    return sub_plane_graph(g, set(g.rotation) - remove_set)


def identify_vertices(g: PlaneGraph, a: Vertex, b: Vertex,
                      shared_face: FaceWalk) -> tuple[PlaneGraph, MergeReport]:
    """Identify non-adjacent vertices a and b by pulling them together through
    shared_face.  The merged vertex keeps the name `a`.

    If the face walk passes a-x-b (or b-x-a), the parallel pair (ax, bx) is
    merged into one edge and reported.  Any other common neighbor, a second
    forced merge, or routing through the outer face is an error.
    """
    if a == b:
        raise IdentificationError("cannot identify a vertex with itself")
    if not (g.has_vertex(a) and g.has_vertex(b)):
        raise IdentificationError("unknown vertex")
    if g.adjacent(a, b):
        raise IdentificationError(f"{a} and {b} are adjacent")
    if shared_face not in g.faces:
        raise IdentificationError("shared_face is not a face of this graph")
    if shared_face.is_outer:
        raise IdentificationError("cannot identify through the outer face")
    walk = shared_face.boundary
    verts_on = shared_face.vertex_set()
    if a not in verts_on or b not in verts_on:
        raise IdentificationError("both vertices must lie on shared_face")

    n = len(walk)
    merge_mid: Vertex | None = None
    corner_a = corner_b = None
    # Prefer corners forming a-x-b along the walk: that is the merging splice.
    for i in range(n):
        u1, v1 = walk[i]
        u2, v2 = walk[(i + 1) % n]
        if (u1, v2) in ((a, b), (b, a)) and v1 == u2:
            merge_mid = v1
            if u1 == a:
                corner_a, corner_b = i, (i + 2) % n
            else:
                corner_b, corner_a = i, (i + 2) % n
            break
    if corner_a is None:
        for i, (u, _) in enumerate(walk):
            if u == a and corner_a is None:
                corner_a = i
            if u == b and corner_b is None:
                corner_b = i

    common = g.neighbors(a) & g.neighbors(b)
    if merge_mid is None:
        if common:
            raise IdentificationError(
                f"identification would create parallel edges via {sorted(common)}")
    else:
        if common != {merge_mid}:
            raise IdentificationError(
                "more than one pair of edges would be merged: "
                f"{sorted(common)}")

    def corner_segment(v: Vertex, pos: int) -> list[Vertex]:
        # walk[pos] = (v, y); incoming edge gives x; rotation from y around to x.
        y = walk[pos][1]
        nbrs = g.rotation[v]
        i = nbrs.index(y)
        return [nbrs[(i + k) % len(nbrs)] for k in range(len(nbrs))]

    seg_a = corner_segment(a, corner_a)
    seg_b = corner_segment(b, corner_b)
    merged_rot = seg_a + seg_b
    if merge_mid is not None:
        # The two occurrences of the mid vertex are cyclically adjacent; fuse them.
        idxs = [i for i, x in enumerate(merged_rot) if x == merge_mid]
        assert len(idxs) == 2
        i1, i2 = idxs
        if i2 == i1 + 1 or (i1 == 0 and i2 == len(merged_rot) - 1):
            merged_rot.pop(i2)
        else:
            raise IdentificationError("merged edges are not on a common corner")
    if len(set(merged_rot)) != len(merged_rot):
        raise IdentificationError("identification would create parallel edges")

    rot: dict[Vertex, tuple[Vertex, ...]] = {}
    for v, nbrs in g.rotation.items():
        if v == b:
            continue
        if v == a:
            rot[v] = tuple(merged_rot)
            continue
        new = []
        prev = None
        for x in nbrs:
            x = a if x == b else x
            if x == a and prev == a:
                continue  # fused pair at the merge mid vertex
            new.append(x)
            prev = x
        if new and new[0] == a and new[-1] == a and len(new) > 1:
            new.pop()
        if len(set(new)) != len(new):
            raise IdentificationError(f"identification would create parallel edges at {v}")
        rot[v] = tuple(new)

    # Re-anchor the outer face on a surviving directed edge of the old walk.
    outer_edge = None
    for u, v in g.outer_face.boundary:
        u2 = a if u == b else u
        v2 = a if v == b else v
        if u2 in rot and v2 in rot.get(u2, ()):
            outer_edge = (u2, v2)
            break
    if outer_edge is None:
        raise IdentificationError("outer face lost by identification")
    try:
        g2 = PlaneGraph(rot, outer_edge)
    except GraphInputError as exc:
        raise IdentificationError(f"identification broke the embedding: {exc}") from exc
    merged_pair = None
    if merge_mid is not None:
        merged_pair = (edge_key(a, merge_mid), edge_key(b, merge_mid))
    return g2, MergeReport(kept=a, absorbed=b, merged=merged_pair)


# -- text format --------------------------------------------------------------

def parse_plane_graph(text: str) -> PlaneGraph:
    """Parse the one-file format:

        planegraph <V> <E>
        v: n1 n2 ... nk        # clockwise rotation
        outer: u v
    """
    header: tuple[int, int] | None = None
    rotation: dict[str, tuple[str, ...]] = {}
    outer: DirEdge | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 3 or parts[0] != "planegraph":
                raise GraphInputError(f"line {lineno}: expected 'planegraph <V> <E>'")
            try:
                header = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise GraphInputError(f"line {lineno}: bad vertex/edge counts") from None
            continue
        if line.startswith("outer:"):
            parts = line[len("outer:"):].split()
            if len(parts) != 2:
                raise GraphInputError(f"line {lineno}: outer needs exactly two vertices")
            outer = (parts[0], parts[1])
            continue
        if ":" not in line:
            raise GraphInputError(f"line {lineno}: expected 'vertex: neighbors...'")
        name, rest = line.split(":", 1)
        name = name.strip()
        if not name:
            raise GraphInputError(f"line {lineno}: empty vertex name")
        if name in rotation:
            raise GraphInputError(f"line {lineno}: duplicate vertex {name}")
        rotation[name] = tuple(rest.split())
    if header is None:
        raise GraphInputError("missing 'planegraph' header line")
    if outer is None:
        raise GraphInputError("missing 'outer:' line")
    v_count, e_count = header
    if len(rotation) != v_count:
        raise GraphInputError(
            f"header says {v_count} vertices, file defines {len(rotation)}")
    half_edges = sum(len(n) for n in rotation.values())
    if half_edges != 2 * e_count:
        raise GraphInputError(
            f"header says {e_count} edges, rotations define {half_edges} half-edges")
    return PlaneGraph(rotation, outer)


def format_plane_graph(g: PlaneGraph) -> str:
    lines = [f"planegraph {g.vertex_count} {g.edge_count}"]
    for v in g.vertices:
        lines.append(f"{v}: {' '.join(g.rotation[v])}")
    lines.append(f"outer: {g.outer_edge[0]} {g.outer_edge[1]}")
    return "\n".join(lines) + "\n"


def load_plane_graph(path) -> PlaneGraph:
    from pathlib import Path
    return parse_plane_graph(Path(path).read_text())
