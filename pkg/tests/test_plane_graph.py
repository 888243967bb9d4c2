import pytest
from hypothesis import given, settings, strategies as st

from tricolor.generators import (
    cycle_graph, g1, g2, m_face_instance, random_class_graph,
)
from tricolor.plane_graph import (
    GraphInputError,
    IdentificationError,
    InvalidCycleError,
    PlaneGraph,
    ReductionError,
    delete_vertices,
    format_plane_graph,
    identify_vertices,
    is_separating,
    parse_plane_graph,
    sides_of_cycle,
    sub_plane_graph,
    trace_faces,
)

GRAPHS = st.integers(0, 120).map(lambda s: random_class_graph(s, 18))


def euler_ok(g):
    return g.vertex_count - g.edge_count + len(g.faces) == 2


def test_face_trace_c6():
    g = cycle_graph(6)
    assert sorted(f.size for f in g.faces) == [6, 6]


def test_face_trace_k3():
    g = cycle_graph(3)
    assert sorted(f.size for f in g.faces) == [3, 3]


def test_face_trace_g1():
    g = g1()
    assert sorted(f.size for f in g.faces) == [3, 6, 9, 12]
    assert g.outer_face.size == 12


def test_directed_edges_partition():
    g = g1()
    seen = set()
    for f in g.faces:
        for e in f.boundary:
            assert e not in seen
            seen.add(e)
    assert len(seen) == 2 * g.edge_count
    assert sum(f.size for f in g.faces) == 2 * g.edge_count


def test_constructor_rejects_asymmetry():
    with pytest.raises(GraphInputError):
        PlaneGraph({"a": ("b",), "b": (), "c": ("a",)}, ("a", "b"))


def test_constructor_rejects_disconnected():
    rot = {"a": ("b",), "b": ("a",), "c": ("d",), "d": ("c",)}
    with pytest.raises(GraphInputError):
        PlaneGraph(rot, ("a", "b"))


def test_constructor_rejects_nonplanar_rotation():
    # K5 is not planar: no rotation system can satisfy Euler's formula.
    names = [f"v{i}" for i in range(5)]
    rot = {v: tuple(n for n in names if n != v) for v in names}
    with pytest.raises(GraphInputError):
        PlaneGraph(rot, ("v0", "v1"))


def test_sides_of_cycle_c6():
    g = cycle_graph(6)
    ref = sides_of_cycle(g, g.boundary_cycle())
    assert ref.interior == frozenset() and ref.exterior == frozenset()
    assert not is_separating(g, ref)


def test_sides_of_cycle_g1():
    g = g1()
    ref = sides_of_cycle(g, [f"v{i}" for i in range(1, 13)])
    assert ref.interior == {"u"} and ref.exterior == frozenset()


def test_sides_of_cycle_g2_triangle():
    g = g2()
    ref = sides_of_cycle(g, ["u1", "u2", "u3"])
    assert ref.interior == frozenset()
    assert {f"v{i}" for i in range(1, 13)} <= ref.exterior


def test_is_separating_g1():
    # Both short cycles of the drawing are facial: nothing strictly inside.
    g = g1()
    ref = sides_of_cycle(g, ["u", "v2", "v3", "v4", "v5", "v6"])
    assert ref.interior == frozenset()
    assert not is_separating(g, ref)
    tri = sides_of_cycle(g, ["u", "v1", "v2"])
    assert not is_separating(g, tri)


def test_is_separating_inner_hexagon():
    from tricolor.generators import sep_cycle_instance
    g = sep_cycle_instance()
    ref = sides_of_cycle(g, [f"h{i}" for i in range(1, 7)])
    assert is_separating(g, ref)
    assert ref.interior == {"p"}
    assert {f"d{i}" for i in range(1, 7)} <= ref.exterior


def test_sides_partition_count():
    g = g1()
    ref = sides_of_cycle(g, ["u", "v2", "v3", "v4", "v5", "v6"])
    assert len(ref.interior) + len(ref.exterior) + len(ref) == g.vertex_count


def test_invalid_cycle_rejected():
    g = cycle_graph(6)
    with pytest.raises(InvalidCycleError):
        sides_of_cycle(g, ["v1", "v3", "v5"])
    with pytest.raises(InvalidCycleError):
        sides_of_cycle(g, ["v1", "v2"])


def test_delete_g1_u_gives_c12():
    g = delete_vertices(g1(), {"u"})
    assert g.vertex_count == 12 and g.edge_count == 12
    assert sorted(f.size for f in g.faces) == [12, 12]
    assert euler_ok(g)


def test_delete_cycle_vertex_gives_path():
    g = delete_vertices(cycle_graph(6), {"v3"})
    assert g.vertex_count == 5 and g.edge_count == 4
    assert len(g.faces) == 1 and g.faces[0].size == 8
    assert euler_ok(g)


def test_delete_disconnecting_raises():
    g = m_face_instance()
    # removing the hook p-vertex chain's anchor isolates the apex side
    with pytest.raises(ReductionError):
        delete_vertices(g, {"q12", "v1", "v2"})


def test_m_face_deletion_connected():
    g = m_face_instance()
    reduced = delete_vertices(g, {"v1", "v2", "v3", "v5", "v6", "v7"})
    assert euler_ok(reduced)


def test_identify_antipodal_c8():
    g = cycle_graph(8)
    inner = next(f for f in g.faces if not f.is_outer)
    g2_, rep = identify_vertices(g, "v1", "v5", inner)
    assert rep.merged is None
    assert g2_.vertex_count == 7 and g2_.edge_count == 8
    assert sorted(f.size for f in g2_.faces) == [4, 4, 8]
    assert euler_ok(g2_)


def test_identify_adjacent_rejected():
    g = cycle_graph(8)
    inner = next(f for f in g.faces if not f.is_outer)
    with pytest.raises(IdentificationError):
        identify_vertices(g, "v1", "v2", inner)


def test_identify_through_outer_rejected():
    g = cycle_graph(8)
    with pytest.raises(IdentificationError):
        identify_vertices(g, "v1", "v5", g.outer_face)


def test_identify_merges_single_pair():
    # path a-x-b along a face corner: identifying a,b merges (ax, bx)
    g = cycle_graph(6)
    inner = next(f for f in g.faces if not f.is_outer)
    g2_, rep = identify_vertices(g, "v1", "v3", inner)
    assert rep.merged is not None
    assert set(rep.merged) == {("v1", "v2"), ("v2", "v3")}
    assert g2_.vertex_count == 5 and g2_.edge_count == 5
    assert euler_ok(g2_)


def test_identify_double_merge_rejected():
    # antipodal vertices of C4 have two common neighbors: both pairs would merge
    g = cycle_graph(4)
    inner = next(f for f in g.faces if not f.is_outer)
    with pytest.raises(IdentificationError):
        identify_vertices(g, "v1", "v3", inner)


def test_sub_plane_graph_interior():
    g = g1()
    sub = sub_plane_graph(g, {f"v{i}" for i in range(1, 13)} | {"u"})
    assert sub == g  # keeping everything is the identity
    sub2 = sub_plane_graph(g, {f"v{i}" for i in range(1, 13)})
    assert sub2.outer_face.size == 12


def test_roundtrip_named():
    for g in (cycle_graph(6), g1(), g2(), m_face_instance()):
        assert parse_plane_graph(format_plane_graph(g)) == g


def test_parse_errors_carry_line_numbers():
    with pytest.raises(GraphInputError, match="line 2"):
        parse_plane_graph("planegraph 3 3\nbogus line without colon\n")
    with pytest.raises(GraphInputError, match="planegraph"):
        parse_plane_graph("v1: v2\n")


def test_parse_count_mismatch():
    text = "planegraph 4 3\nv1: v2 v3\nv2: v3 v1\nv3: v1 v2\nouter: v1 v2\n"
    with pytest.raises(GraphInputError, match="4 vertices"):
        parse_plane_graph(text)


@settings(max_examples=40, deadline=None)
@given(GRAPHS)
def test_euler_and_degree_sums(g):
    assert euler_ok(g)
    assert sum(g.degree(v) for v in g.vertices) == 2 * g.edge_count
    assert sum(f.size for f in g.faces) == 2 * g.edge_count


@settings(max_examples=25, deadline=None)
@given(GRAPHS)
def test_roundtrip_random(g):
    assert parse_plane_graph(format_plane_graph(g)) == g


@settings(max_examples=20, deadline=None)
@given(GRAPHS, st.integers(0, 10_000))
def test_delete_preserves_euler(g, pick):
    internal = g.internal_vertices()
    if not internal:
        return
    v = internal[pick % len(internal)]
    try:
        reduced = delete_vertices(g, {v})
    except ReductionError:
        return
    assert euler_ok(reduced)
    assert trace_faces(reduced) == reduced.faces
