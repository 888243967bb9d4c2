import pytest
from hypothesis import given, settings, strategies as st

from helpers import (
    brute_biclaw_keys,
    brute_claw_keys,
    brute_combclaw_keys,
    brute_cycles,
    brute_special_faces,
    brute_triangle_incidence,
    brute_triclaw_keys,
    brute_weak_tetrads,
)
from tricolor.generators import (
    biclaw_3666, biclaw_6366, claw9, claw_368, combclaw_36666, cycle_graph,
    g1, g2, hex_edge_instance, m_face_instance, mm_face_instance,
    random_class_graph, sep_cycle_instance, tetrad_instance, triclaw_3666,
    triclaw_3668,
)
from tricolor.plane_graph import edge_key, sides_of_cycle
from tricolor.structures import (
    CycleKind,
    PreconditionError,
    bad_cycle_catalog,
    bad_cycle_report,
    classify_cycle,
    detect_all,
    enumerate_cycles,
    face_roles,
    find_biclaws,
    find_chords,
    find_claws,
    find_combclaws,
    find_hex_tri_edges,
    find_m_faces,
    find_mm_faces,
    find_splitting_paths,
    find_triclaws,
    find_weak_tetrads,
    in_class,
    is_ext_triangular,
    raw_cycles,
    splitting_path_violations,
    triangular_status,
    weak_tetrad_count,
)

SMALL = st.integers(0, 80).map(lambda s: random_class_graph(s, 12))


def boundary_ref(g):
    return sides_of_cycle(g, g.boundary_cycle())


# -- cycle enumeration ------------------------------------------------------------

def test_enumerate_cycles_c6():
    assert len(enumerate_cycles(cycle_graph(6), 12)) == 1


def test_enumerate_cycles_k3():
    assert len(enumerate_cycles(cycle_graph(3), 3)) == 1


def test_enumerate_cycles_g1_against_brute():
    g = g1()
    assert set(raw_cycles(g, 9)) == brute_cycles(g, 9)


def test_enumerate_budget():
    with pytest.raises(ValueError):
        raw_cycles(cycle_graph(6), 13)


@settings(max_examples=15, deadline=None)
@given(SMALL)
def test_cycles_match_brute(g):
    if g.vertex_count > 11:
        return
    assert set(raw_cycles(g, 7)) == brute_cycles(g, 7)


# -- triangular status -------------------------------------------------------------

def test_triangular_k3():
    g = cycle_graph(3)
    ts = triangular_status(g)
    assert len(ts.edges) == 3 and len(ts.vertices) == 3


def test_triangular_c6():
    ts = triangular_status(cycle_graph(6))
    assert not ts.edges and not ts.vertices


def test_triangular_g1():
    g = g1()
    ts = triangular_status(g)
    assert ts.edges == {edge_key("u", "v1"), edge_key("u", "v2"),
                        edge_key("v1", "v2")}
    assert ts.vertices == {"u", "v1", "v2"}


@settings(max_examples=15, deadline=None)
@given(SMALL)
def test_triangular_matches_brute(g):
    ts = triangular_status(g)
    be, bv = brute_triangle_incidence(g)
    assert ts.edges == frozenset(be) and ts.vertices == frozenset(bv)


# -- ext-triangular -----------------------------------------------------------------

def test_ext_triangular_g1_hexagon():
    g = g1()
    ref = sides_of_cycle(g, ["u", "v2", "v3", "v4", "v5", "v6"])
    ext, tri = is_ext_triangular(g, ref)
    assert ext and tri == ("u", "v1", "v2")


def test_ext_triangular_c7_false():
    g = cycle_graph(7)
    assert not is_ext_triangular(g, boundary_ref(g))[0]


def test_ext_triangular_g2_triangle_false():
    g = g2()
    ref = sides_of_cycle(g, ["u1", "u2", "u3"])
    assert not is_ext_triangular(g, ref)[0]


def test_seven_cycle_with_interior_triangle_not_ext():
    # the 7-cycle of g1 around the triangle keeps it in the closed interior
    g = g1()
    ref = sides_of_cycle(g, ["u", "v1", "v2", "v3", "v4", "v5", "v6"])
    assert not is_ext_triangular(g, ref)[0]


# -- class membership ----------------------------------------------------------------

def test_in_class_c4_c5():
    assert in_class(cycle_graph(4)).violation == "4-cycle"
    assert in_class(cycle_graph(5)).violation == "5-cycle"


def test_in_class_c6_g1():
    assert in_class(cycle_graph(6)).ok
    assert in_class(g1()).ok


def test_all_named_class_members(named):
    skip = {"cycle4", "cycle5"}
    for name, g in named.items():
        if name in skip:
            assert not in_class(g).ok
        else:
            assert in_class(g).ok, f"{name}: {in_class(g).violation}"


# -- finders -----------------------------------------------------------------------

def test_claw9_cells():
    g = claw9()
    claws = find_claws(g, boundary_ref(g))
    assert len(claws) == 1 and claws[0].cell_lengths == (3, 6, 6)


def test_g1_claw_cells():
    g = g1()
    claws = find_claws(g, boundary_ref(g))
    assert len(claws) == 1 and claws[0].cell_lengths == (3, 6, 9)


def test_empty_interior_finders_empty():
    g = cycle_graph(6)
    ref = boundary_ref(g)
    assert not (find_chords(g, ref) or find_claws(g, ref)
                or find_biclaws(g, ref) or find_triclaws(g, ref)
                or find_combclaws(g, ref))


@pytest.mark.parametrize("builder,kind,cells", [
    (claw9, "claw", (3, 6, 6)),
    (claw_368, "claw", (3, 6, 8)),
    (biclaw_3666, "biclaw", (3, 6, 6, 6)),
    (biclaw_6366, "biclaw", (6, 3, 6, 6)),
    (triclaw_3666, "triclaw", (3, 6, 6, 6)),
    (triclaw_3668, "triclaw", (3, 6, 6, 8)),
    (combclaw_36666, "combclaw", (3, 6, 6, 6, 6)),
])
def test_witness_partitions(builder, kind, cells):
    g = builder()
    cls = classify_cycle(g, boundary_ref(g))
    assert cls.kind is CycleKind.BAD
    assert {(p.kind, p.cell_lengths) for p in cls.partitions} == {(kind, cells)}


def test_cell_arithmetic_invariant():
    for builder in (claw9, claw_368, biclaw_3666, biclaw_6366,
                    triclaw_3666, triclaw_3668, combclaw_36666):
        g = builder()
        ref = boundary_ref(g)
        for p in (find_claws(g, ref) + find_biclaws(g, ref)
                  + find_triclaws(g, ref) + find_combclaws(g, ref)):
            assert sum(len(c) for c in p.cells) == len(ref) + 2 * len(p.attachment)
            assert all(len(c) >= 3 for c in p.cells)
            assert all(len(c) not in (4, 5) for c in p.cells)


def test_classify_long():
    g = g1()
    assert classify_cycle(g, boundary_ref(g)).kind is CycleKind.LONG


def test_classify_good_chordless_c6():
    g = cycle_graph(6)
    assert classify_cycle(g, boundary_ref(g)).kind is CycleKind.GOOD


def test_chord_detection():
    # hexagon boundary with an inside chord-path contracted to an edge is
    # not class material; build C8 with a chord drawn inside instead
    from tricolor.plane_graph import PlaneGraph
    rot = {
        "v1": ("v2", "v3", "v8"),
        "v2": ("v3", "v1"), "v3": ("v4", "v1", "v2"),
        "v4": ("v5", "v3"), "v5": ("v6", "v4"), "v6": ("v7", "v5"),
        "v7": ("v8", "v6"), "v8": ("v1", "v7"),
    }
    g = PlaneGraph(rot, ("v1", "v2"))
    ref = boundary_ref(g)
    chords = find_chords(g, ref)
    assert len(chords) == 1
    assert chords[0].cell_lengths == (3, 7)


# -- catalog and bad-cycle audit ----------------------------------------------------

def test_bad_cycle_catalog_exact():
    expected = {
        ("claw", 9): {(3, 6, 6)},
        ("triclaw", 9): {(3, 6, 6, 6)},
        ("claw", 11): {(3, 6, 8)},
        ("biclaw", 11): {(3, 6, 6, 6), (6, 3, 6, 6)},
        ("triclaw", 11): {(3, 6, 6, 8)},
        ("combclaw", 11): {(3, 6, 6, 6, 6)},
    }
    assert bad_cycle_catalog() == expected


def test_bad_cycle_report_witnesses():
    rep = bad_cycle_report(claw9())
    assert len(rep.records) == 1
    rec = rep.records[0]
    assert rec.length == 9 and rec.catalog_ok and not rec.has_chord
    assert rep.chorded_bad == () and rep.ext_triangular_bad_9 == ()


def test_bad_cycle_report_rejects_nonclass():
    with pytest.raises(PreconditionError):
        bad_cycle_report(cycle_graph(4))


def test_bad_cycle_report_clean_on_good():
    rep = bad_cycle_report(cycle_graph(6))
    assert rep.records == ()


# -- splitting paths ------------------------------------------------------------------

def test_splitting_paths_g1():
    g = g1()
    d = boundary_ref(g)
    paths = find_splitting_paths(g, d, 5)
    assert paths == [("v1", "u", "v2"), ("v1", "u", "v6"), ("v2", "u", "v6")]


def test_splitting_paths_c6_none():
    g = cycle_graph(6)
    assert find_splitting_paths(g, boundary_ref(g), 5) == []


def test_splitting_paths_g2():
    g = g2()
    d = boundary_ref(g)
    paths = find_splitting_paths(g, d, 5)
    assert ("v1", "u1", "u2", "v4") in paths
    assert ("v1", "u1", "u3", "v7") in paths


def test_splitting_path_violations_empty_on_long_boundary():
    assert splitting_path_violations(g1()) == []


def test_splitting_path_violation_3path():
    # good boundary C9 with a splitting 3-path: always a violation witness
    from tricolor.generators import _build, _ring, _cycle_edges
    ring = [f"v{i}" for i in range(1, 10)]
    pos = _ring(ring)
    pos["a"] = (0.3, 0.5)
    pos["b"] = (0.3, -0.5)
    edges = _cycle_edges(ring) + [("v1", "a"), ("a", "b"), ("b", "v5")]
    g = _build(edges, pos, ("v1", "v2"))
    viols = splitting_path_violations(g)
    assert any(v.rule == "3-path" for v in viols)


# -- roles, tetrads, special faces, 6/3-edges ------------------------------------------

def test_face_roles_fourvertex():
    from tricolor.generators import four_vertex_instance
    g = four_vertex_instance()
    ts = triangular_status(g)
    roles = {}
    for f in g.faces:
        for r in face_roles(g, f, ts):
            if r.vertex == "z" and r.role != "none":
                roles[g.face_index(f)] = r.role
    # z is mlight on both big faces (both flanking edges triangular, degree 4)
    assert sorted(roles.values()) == ["mlight", "mlight"]


def test_role_exclusivity(corpus_small):
    for g in corpus_small[:40]:
        ts = triangular_status(g)
        for f in g.faces:
            for r in face_roles(g, f, ts):
                assert r.role in ("heavy", "mlight", "vlight", "none")


def test_tetrad_instance_found():
    g = tetrad_instance()
    tets = find_weak_tetrads(g)
    assert any(t.path == ("v1", "v2", "v3", "v4", "v5") for t in tets)
    assert weak_tetrad_count(g) == 1


def test_m_face_found():
    g = m_face_instance()
    hits = find_m_faces(g)
    assert len(hits) == 1
    assert not find_mm_faces(g)


def test_mm_face_found():
    g = mm_face_instance()
    hits = find_mm_faces(g)
    assert len(hits) == 1
    assert not find_m_faces(g)


def test_hex_tri_edge_found():
    g = hex_edge_instance()
    hits = find_hex_tri_edges(g)
    assert [h.edge for h in hits] == [("u", "v")]


def test_c6_all_finders_empty():
    g = cycle_graph(6)
    assert not find_weak_tetrads(g)
    assert not find_m_faces(g)
    assert not find_mm_faces(g)
    assert not find_hex_tri_edges(g)


# -- detector vs brute force ------------------------------------------------------------

def _finder_keys(g, ref):
    return ({p.key for p in find_claws(g, ref)},
            {p.key for p in find_biclaws(g, ref)},
            {p.key for p in find_triclaws(g, ref)},
            {p.key for p in find_combclaws(g, ref)})


def assert_brute_equivalence(g):
    for c in enumerate_cycles(g, 11):
        claws, biclaws, triclaws, combclaws = _finder_keys(g, c)
        assert claws == brute_claw_keys(g, c)
        assert biclaws == brute_biclaw_keys(g, c)
        assert triclaws == brute_triclaw_keys(g, c)
        assert combclaws == brute_combclaw_keys(g, c)
    assert ({(t.face_index, t.path) for t in find_weak_tetrads(g)}
            == brute_weak_tetrads(g))
    assert ({(m.face_index, lab) for m in find_m_faces(g)
             for lab in m.labelings} == brute_special_faces(g, "m"))
    assert ({(m.face_index, lab) for m in find_mm_faces(g)
             for lab in m.labelings} == brute_special_faces(g, "mm"))


def test_brute_equivalence_witnesses():
    for builder in (claw9, triclaw_3666, biclaw_6366, combclaw_36666):
        assert_brute_equivalence(builder())


@settings(max_examples=12, deadline=None)
@given(SMALL)
def test_brute_equivalence_random(g):
    assert_brute_equivalence(g)


# -- class facts ------------------------------------------------------------------------

def test_short_cycles_facial_given_lemma_premises(corpus_small):
    """In a class member that is 2-connected with no separating good cycle,
    every 3-, 6-, 8-cycle bounds a face."""
    face_keys_cache = {}
    checked = 0
    for g in corpus_small[:80]:
        if not g.is_2connected():
            continue
        if detect_all(g)["separating-good-cycle"]:
            continue
        face_cycles = {f.vertex_set() for f in g.faces}
        for c in enumerate_cycles(g, 8):
            if len(c) in (3, 6, 8):
                assert frozenset(c.verts) in face_cycles, (g, c)
                checked += 1
    assert checked > 0


def test_detect_all_keys():
    rep = detect_all(cycle_graph(6))
    assert set(rep) == {
        "internal-low-degree", "cut-vertex", "hex-tri-edge", "weak-tetrad",
        "m-face", "mm-face", "splitting-path-violation",
        "separating-good-cycle", "bad-cycle-with-chord",
        "ext-triangular-bad-9-cycle"}
    assert all(not v for v in rep.values())
