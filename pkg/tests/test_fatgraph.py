import random

import pytest
from hypothesis import given, settings, strategies as st

from sgk import instances
from sgk.fatgraph import (
    FatGraph,
    GraphError,
    GraphParams,
    Vertex,
    check_no_parallel_same_label,
    check_parity_rule,
    validate_labels,
)
from sgk.generators import derive_far_graph, random_rotation_system

from conftest import bundle_graphs


def one_loop_torus():
    # single 4-valent vertex, two crossing loops: the square torus
    params = GraphParams(delta=2, own_labels=2, partner_labels=2)
    v = Vertex(1, 1, ((0, 1), (1, 2), (0, 1), (1, 2)))
    edges = {0: ((1, 0), (1, 2)), 1: ((1, 1), (1, 3))}
    return FatGraph(params, [v], edges)


def theta_graph():
    params = GraphParams(delta=3, own_labels=1, partner_labels=1)
    x = Vertex(1, 1, ((0, 1), (1, 1), (2, 1)))
    y = Vertex(2, -1, ((0, 1), (2, 1), (1, 1)))
    edges = {0: ((1, 0), (2, 0)), 1: ((1, 1), (2, 2)), 2: ((1, 2), (2, 1))}
    return FatGraph(params, [x, y], edges)


def test_torus_face_count():
    g = one_loop_torus()
    assert g.ambient.genus == 1
    assert len(g.trace_faces()) == 1


def test_theta_is_spherical():
    g = theta_graph()
    assert g.ambient.genus == 0
    assert sorted(f.size for f in g.trace_faces()) == [2, 2, 2]


def test_dipole_census():
    g = instances.esc_dipole(4)
    assert g.ambient.genus == 0
    assert g.face_census() == {2: 4}


def test_structure_errors():
    params = GraphParams(delta=1, own_labels=2, partner_labels=2)
    v = Vertex(1, 1, ((0, 1), (0, 2)))
    with pytest.raises(GraphError):
        FatGraph(params, [v], {0: ((1, 0), (1, 0))})
    with pytest.raises(GraphError):
        FatGraph(params, [v, v], {0: ((1, 0), (1, 1))})


def test_serialization_round_trip():
    g = instances.esc_dipole(6)
    h = FatGraph.loads(g.dumps())
    assert h.face_census() == g.face_census()
    assert h.edges == g.edges
    assert [v.rotation for v in h.vertices] == [v.rotation for v in g.vertices]


def test_edge_classes_partition():
    g = instances.esc_dipole(6)
    classes = g.edge_classes()
    seen = sorted(e for c in classes for e in c.edges)
    assert seen == sorted(g.edges)
    # the rainbow dipole is one long parallelism class
    assert len(classes) == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_random_maps_satisfy_euler_identity(seed):
    g = random_rotation_system(random.Random(seed), max_v=6, max_e=18)
    census = g.face_census()
    assert sum(i * n for i, n in census.items()) == 2 * g.edge_count
    chi = g.vertex_count - g.edge_count + len(g.trace_faces())
    assert chi % 2 == 0 and chi <= 2
    assert g.ambient.genus == (2 - chi) // 2
    assert validate_labels(g).ok


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**9))
def test_label_corruption_is_caught(seed):
    rng = random.Random(seed)
    g = random_rotation_system(rng, max_v=4, max_e=12)
    v = rng.choice(g.vertices)
    p = rng.randrange(v.valence)
    t = g.params.partner_labels
    if t < 3:
        return
    rot = list(v.rotation)
    eid, lab = rot[p]
    rot[p] = (eid, (lab + 1) % t + 1)
    bad = FatGraph(
        g.params,
        [Vertex(u.id, u.sign, tuple(rot) if u.id == v.id else u.rotation)
         for u in g.vertices],
        g.edges,
    )
    rep = validate_labels(bad)
    assert not rep.ok
    assert any(vi.vertex == v.id for vi in rep.violations)


def test_parity_on_goldens(valid_bundles):
    for doc in valid_bundles:
        near, far, corr = bundle_graphs(doc)
        assert check_parity_rule(near, far, corr).ok, doc["name"]


def test_parity_is_symmetric(valid_bundles):
    # the rule reads the same from either side once corr is transposed
    for doc in valid_bundles[:10]:
        near, far, corr = bundle_graphs(doc)
        inv = {v: k for k, v in corr.items()}
        assert check_parity_rule(far, near, inv).ok, doc["name"]


def test_derived_far_sides_have_no_parallel_same_label_violation_report():
    g = instances.esc_dipole(4)
    far, _ = derive_far_graph(g)
    rep = check_no_parallel_same_label(far)
    for v in rep.violations:
        assert v.kind == "parallel-same-label"
