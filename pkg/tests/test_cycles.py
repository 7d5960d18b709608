import pytest

from sgk import instances
from sgk.cycles import (
    FescTypeError,
    classify_fesc_type,
    find_escs,
    find_fescs,
    find_scharlemann_cycles,
)
from sgk.fatgraph import FatGraph, GraphParams, Vertex


def test_sc_on_dipole():
    g = instances.esc_dipole(4)
    scs = find_scharlemann_cycles(g)
    assert scs
    # the inner bigon on {2,3} and the outer one on the wrapped pair {4,1}
    assert {sc.label_pair for sc in scs} == {(2, 3), (4, 1)}
    for sc in scs:
        assert sc.length == 2


def test_double_sc_dipole():
    g = instances.double_sc_dipole()
    pairs = {sc.label_pair for sc in find_scharlemann_cycles(g)}
    assert pairs == {(1, 2), (3, 4)}


def test_esc_on_dipole_t4():
    g = instances.esc_dipole(4)
    escs = find_escs(g)
    assert escs
    widths = sorted(len(e.edges) for e in escs)
    # a 1-ESC is 4 parallel edges; the cyclic class closes up, so the
    # scan must find it even though any linear cut would split it
    assert 4 in widths


def test_esc_on_dipole_t6():
    g = instances.esc_dipole(6)
    escs = find_escs(g)
    widths = sorted(len(e.edges) for e in escs)
    assert 4 in widths and 6 in widths


def test_fesc_detection():
    g = instances.fesc_instance(0)
    fescs = find_fescs(g)
    assert fescs
    rec = fescs[0]
    assert set(rec.outer_pair) == {0, 3}


def test_fesc_shifted_core():
    g0 = instances.fesc_instance(0)
    g1 = instances.fesc_instance(1)
    sc0 = {sc.label_pair for sc in find_scharlemann_cycles(g0)}
    sc1 = {sc.label_pair for sc in find_scharlemann_cycles(g1)}
    assert (2, 3) in sc0
    assert (3, 4) in sc1
    assert find_fescs(g1)


def parallel_far_side():
    # a far side in which the fork's outer pair (edges 0 and 3) cobound
    # a bigon, so classification is allowed
    params = GraphParams(delta=1, own_labels=2, partner_labels=2)
    a = Vertex(1, 1, ((0, 1), (3, 2)))
    b = Vertex(2, 1, ((3, 1), (0, 2)))
    edges = {0: ((1, 0), (2, 1)), 3: ((1, 1), (2, 0))}
    return FatGraph(params, [a, b], edges)


def test_fesc_type_classification():
    g = instances.fesc_instance(0)
    rec = find_fescs(g)[0]
    gf = parallel_far_side()
    # vertex 1 meets both outer edges, vertex 2 just one, vertex 4 none
    assert classify_fesc_type(rec, g, gf, 1) == "I"
    assert classify_fesc_type(rec, g, gf, 2) == "II"
    with pytest.raises(FescTypeError):
        classify_fesc_type(rec, g, gf, 4)


def test_fesc_type_refused_when_not_parallel():
    g = instances.fesc_instance(0)
    rec = find_fescs(g)[0]
    # interleaved loops on a torus: no bigons, so nothing is parallel
    params = GraphParams(delta=2, own_labels=2, partner_labels=2)
    a = Vertex(1, 1, ((0, 1), (3, 2), (0, 1), (3, 2)))
    edges = {0: ((1, 0), (1, 2)), 3: ((1, 1), (1, 3))}
    gf = FatGraph(params, [a], edges)
    assert not any({0, 3} <= c.edges for c in gf.edge_classes())
    with pytest.raises(FescTypeError):
        classify_fesc_type(rec, g, gf, 1)


def test_escs_nest():
    # every n-ESC contains an (n-1)-ESC on the same core
    for t in (4, 6, 8, 10):
        g = instances.esc_dipole(t)
        by_core = {}
        for rec in find_escs(g):
            assert len(rec.edges) == 2 * (rec.order + 1)
            by_core.setdefault(rec.core_labels, set()).add(rec.order)
        assert by_core
        for orders in by_core.values():
            for n in orders:
                assert n == 0 or (n - 1) in orders
