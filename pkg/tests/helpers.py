"""Definition-literal brute-force searches, kept independent of the finders:
they iterate raw vertex/edge subsets and re-derive every predicate from
adjacency alone."""

from itertools import combinations

from tricolor.plane_graph import PlaneGraph, edge_key


def brute_triangle_incidence(g: PlaneGraph):
    """(triangular edge set, triangular vertex set) via subset scan."""
    edges = set()
    verts = set()
    for a, b, c in combinations(g.vertices, 3):
        if g.adjacent(a, b) and g.adjacent(b, c) and g.adjacent(a, c):
            edges.update((edge_key(a, b), edge_key(b, c), edge_key(a, c)))
            verts.update((a, b, c))
    return edges, verts


def brute_cycles(g: PlaneGraph, lmax: int):
    """Every simple cycle of length <= lmax by scanning all vertex subsets and
    orderings.  Same normal form as the DFS enumerator: starts at the minimum
    vertex, second element smaller than the last."""
    from itertools import permutations

    found = set()
    verts = sorted(g.vertices)
    for size in range(3, lmax + 1):
        for subset in combinations(verts, size):
            first = subset[0]
            for perm in permutations(subset[1:]):
                if perm[0] > perm[-1]:
                    continue
                cyc = (first,) + perm
                if all(g.adjacent(cyc[i], cyc[(i + 1) % size])
                       for i in range(size)):
                    found.add(cyc)
    return found


def brute_claw_keys(g: PlaneGraph, c):
    on = set(c.verts)
    inside = c.interior
    keys = set()
    for v in g.vertices:
        if v not in inside:
            continue
        feet = [n for n in g.neighbors(v) if n in on]
        for combo in combinations(sorted(feet), 3):
            keys.add(("claw", c.canonical(), v, combo))
    return keys


def brute_biclaw_keys(g: PlaneGraph, c):
    on = set(c.verts)
    inside = c.interior
    keys = set()
    for u in g.vertices:
        for v in g.vertices:
            if u >= v or not g.adjacent(u, v):
                continue
            if u not in inside or v not in inside:
                continue
            u_feet = [n for n in g.neighbors(u) if n in on]
            v_feet = [n for n in g.neighbors(v) if n in on]
            for up in combinations(sorted(u_feet), 2):
                for vp in combinations(sorted(v_feet), 2):
                    keys.add(("biclaw", c.canonical(),
                              frozenset(((u, up), (v, vp)))))
    return keys


def brute_triclaw_keys(g: PlaneGraph, c):
    inside = c.interior
    on = set(c.verts)
    keys = set()
    for a, b, d in combinations(sorted(inside), 3):
        if not (g.adjacent(a, b) and g.adjacent(b, d) and g.adjacent(a, d)):
            continue
        for fa in sorted(n for n in g.neighbors(a) if n in on):
            for fb in sorted(n for n in g.neighbors(b) if n in on):
                for fd in sorted(n for n in g.neighbors(d) if n in on):
                    keys.add(("triclaw", c.canonical(),
                              frozenset(((a, fa), (b, fb), (d, fd)))))
    return keys


def brute_combclaw_keys(g: PlaneGraph, c):
    inside = c.interior
    on = set(c.verts)
    keys = set()
    for tri in combinations(sorted(inside), 3):
        p, q, r = tri
        if not (g.adjacent(p, q) and g.adjacent(q, r) and g.adjacent(p, r)):
            continue
        for u in tri:
            v, w = sorted(set(tri) - {u})
            for x in sorted(inside - set(tri)):
                if not g.adjacent(u, x):
                    continue
                x_feet = [n for n in g.neighbors(x) if n in on]
                for xp in combinations(sorted(x_feet), 2):
                    for v1 in sorted(n for n in g.neighbors(v) if n in on):
                        for w1 in sorted(n for n in g.neighbors(w) if n in on):
                            keys.add(("combclaw", c.canonical(), u, x, xp,
                                      frozenset(((v, v1), (w, w1)))))
    return keys


def _edge_on_triangle(g: PlaneGraph, a, b) -> bool:
    return bool(g.neighbors(a) & g.neighbors(b))


def brute_weak_tetrads(g: PlaneGraph):
    ext = g.outer_face.vertex_set()
    hits = set()
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
                if not (_edge_on_triangle(g, v1, v2)
                        and _edge_on_triangle(g, v3, v4)):
                    continue
                if any(x in ext or g.degree(x) != 3 for x in (v1, v2, v3, v4)):
                    continue
                if g.degree(v5) == 3:
                    hits.add((fi, win))
                    continue
                if v5 in ext or g.degree(v5) != 4:
                    continue
                v6 = walk[(s + 5) % n]
                t1 = _edge_on_triangle(g, v4, v5)
                t2 = _edge_on_triangle(g, v5, v6)
                v5_tri = any(
                    g.adjacent(a, b)
                    for a, b in combinations(sorted(g.neighbors(v5)), 2))
                if (t1 and t2) or (not t1 and not t2 and v5_tri):
                    hits.add((fi, win))
    return hits


def brute_special_faces(g: PlaneGraph, pattern: str):
    """pattern 'm' or 'mm': (face index, labeling) pairs by literal scan."""
    ext = g.outer_face.vertex_set()
    hits = set()
    for fi, f in enumerate(g.faces):
        if f.size != 8 or f.is_outer:
            continue
        verts = f.vertices()
        if len(set(verts)) != 8 or any(v in ext for v in verts):
            continue
        for walk in (verts, tuple(reversed(verts))):
            for s in range(8):
                lab = tuple(walk[(s + k) % 8] for k in range(8))
                v = (None,) + lab
                if pattern == "m":
                    ok = (all(g.degree(v[i]) == 3 for i in (1, 2, 3, 5, 6, 7))
                          and all(_edge_on_triangle(g, v[i], v[j])
                                  for i, j in ((1, 2), (3, 4), (4, 5), (6, 7))))
                else:
                    ok = (g.degree(v[2]) == 4 and g.degree(v[7]) == 4
                          and all(g.degree(v[i]) == 3 for i in (1, 3, 4, 5, 6, 8))
                          and all(_edge_on_triangle(g, v[i], v[j])
                                  for i, j in ((1, 2), (2, 3), (4, 5),
                                               (6, 7), (7, 8))))
                if ok:
                    hits.add((fi, lab))
    return hits


def brute_extend_by_product(g: PlaneGraph, phi):
    """Full 3^n enumeration over the free vertices; None iff nothing proper."""
    import itertools

    free = [v for v in g.vertices if v not in phi]
    edges = g.edges()
    for assignment in itertools.product((1, 2, 3), repeat=len(free)):
        coloring = dict(phi)
        coloring.update(zip(free, assignment))
        if all(coloring[u] != coloring[v] for u, v in edges):
            return coloring
    return None
