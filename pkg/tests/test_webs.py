import random

import pytest

from sgk import instances
from sgk.generators import bundle_web, random_great_web
from sgk.webs import (
    Web,
    check_bigon_abundance,
    find_great_web,
    is_great_gweb,
    lambda_x,
    lambda_x_subweb,
)


def dipole():
    return instances.esc_dipole(4)


def test_induced_subweb_has_no_ghosts():
    w = Web.from_host(dipole(), [1, 2])
    assert w.ghost_count == 0
    assert w.is_connected()
    assert is_great_gweb(w).ok


def test_single_vertex_web_ghost_count():
    w = Web.from_host(dipole(), [1])
    assert w.ghost_count == 4
    assert w.ghost_bound == 4 + 2 * 2 - 2
    assert is_great_gweb(w).ok


def test_find_great_web_maximal():
    w = find_great_web(dipole())
    assert w is not None
    assert sorted(v.id for v in w.vertices) == [1, 2]


def test_find_great_web_sign_split():
    g = instances.fesc_instance(0)
    w = find_great_web(g)
    assert w is not None
    signs = {g.vertex(v.id).sign for v in w.vertices}
    assert len(signs) == 1


def test_web_face_trace_skips_ghosts():
    w = Web.from_host(dipole(), [1, 2], edge_ids=[0, 1])
    assert w.ghost_count == 4
    faces = w.trace_faces()
    assert sum(f.size for f in faces) == 2 * len(w.edges)
    assert sum(len(f.ghosts) for f in faces) == 4


def test_lambda_x_partitions_edge_ends():
    w = bundle_web(3, 4, (6, 6), (0, 2))
    assert w is not None
    t = w.params.partner_labels
    total = sum(lambda_x(w, x).ghost_x for x in range(1, t + 1))
    assert total == w.ghost_count
    per_label_ends = sum(len(lambda_x(w, x).edges) for x in range(1, t + 1))
    expected = sum(
        len({w.vertex(d0[0]).rotation[d0[1]][1],
             w.vertex(d1[0]).rotation[d1[1]][1]})
        for d0, d1 in w.edges.values()
    )
    assert per_label_ends == expected


def test_lambda_x_subweb_keeps_vertices():
    w = bundle_web(3, 4, (6, 6), (0, 2))
    sub = lambda_x_subweb(w, 1)
    assert len(sub.vertices) == len(w.vertices)
    assert set(sub.edges) <= set(w.edges)


def test_bigon_abundance_needs_delta_three():
    w = Web.from_host(dipole(), [1, 2])
    res = check_bigon_abundance(w)
    assert not res.ok
    assert "inapplicable" in res.detail


def test_bigon_abundance_on_bundle_webs(exhaustive_webs):
    assert exhaustive_webs, "exhaustive sweep came back empty"
    for w in exhaustive_webs[:50]:
        assert check_bigon_abundance(w).ok


def test_exhaustive_webs_are_great(exhaustive_webs):
    for w in exhaustive_webs[::37]:
        res = is_great_gweb(w)
        assert res.ok
        assert res.certificate is not None
        assert w.ghost_count <= w.ghost_bound


def test_random_great_webs():
    rng = random.Random(7)
    for _ in range(5):
        w = random_great_web(rng, delta=3, t=4, vmax=4)
        if w is None:
            continue
        assert is_great_gweb(w).ok


def test_outside_face_unique_on_bundle_web():
    w = bundle_web(3, 4, (6, 6), (0, 2))
    outside, unique = w.outside_face_id()
    assert outside is not None
    if w.ghost_count:
        assert unique
