"""Handcrafted reference instances for the golden corpus and tests.

Each builder returns a near-side graph with vertex ids 1..u so that a
partner graph can be derived; see generators.derive_far_graph.
"""

from __future__ import annotations

from sgk.fatgraph import FatGraph, GraphParams, Vertex


def esc_dipole(t: int) -> FatGraph:
    """Two parallel vertices joined by t edges in rainbow position.

    Edge i joins slot i of vertex 1 to slot t-1-i of vertex 2, so every
    consecutive pair cobounds a bigon and the middle pair is a length-2
    Scharlemann cycle; the whole chain is an (t/2 - 1)-ESC on labels 1..t.
    """
    if t < 2 or t % 2:
        raise ValueError("t must be even and >= 2")
    params = GraphParams(delta=1, own_labels=t, partner_labels=t)
    x = Vertex(1, 1, tuple((i, i + 1) for i in range(t)))
    y = Vertex(2, 1, tuple((t - 1 - i, i + 1) for i in range(t)))
    edges = {i: ((1, i), (2, t - 1 - i)) for i in range(t)}
    return FatGraph(params, [x, y], edges)


def fesc_instance(shift: int = 0) -> FatGraph:
    """A forked configuration at t=4: a chain of three parallel edges
    whose inner bigon is a Scharlemann cycle, an extra bigon at one end,
    and a trigon forking off the other end into a fourth vertex.

    shift rotates all labels, moving the core label pair; shift=0 puts
    the core on {2,3} (White), shift=1 on {3,4} (Black).
    """
    t = 4

    def lab(k: int) -> int:
        return 1 + (k - 1 + shift) % t

    params = GraphParams(delta=1, own_labels=t, partner_labels=t)
    # e1,e2,e3: the parallel chain; h1,h2: the fork; k1,k2: filler to the
    # fourth vertex; m: filler loop
    e1, e2, e3, h1, h2, k1, k2, m = range(8)
    x = Vertex(1, 1, ((e1, lab(1)), (e2, lab(2)), (e3, lab(3)), (h1, lab(4))))
    y = Vertex(2, 1, ((h2, lab(1)), (e3, lab(2)), (e2, lab(3)), (e1, lab(4))))
    z = Vertex(3, 1, ((h1, lab(1)), (h2, lab(2)), (k1, lab(3)), (k2, lab(4))))
    w = Vertex(4, 1, ((m, lab(1)), (k1, lab(2)), (k2, lab(3)), (m, lab(4))))
    edges = {
        e1: ((1, 0), (2, 3)),
        e2: ((1, 1), (2, 2)),
        e3: ((1, 2), (2, 1)),
        h1: ((1, 3), (3, 0)),
        h2: ((2, 0), (3, 1)),
        k1: ((3, 2), (4, 1)),
        k2: ((3, 3), (4, 2)),
        m: ((4, 0), (4, 3)),
    }
    return FatGraph(params, [x, y, z, w], edges)


def double_sc_dipole() -> FatGraph:
    """Two parallel vertices, four edges, two disjoint length-2
    Scharlemann cycles on {1,2} and {3,4} separated by mixed bigons."""
    t = 4
    params = GraphParams(delta=1, own_labels=t, partner_labels=t)
    e1, e2, e3, e4 = range(4)
    x = Vertex(1, 1, ((e1, 1), (e2, 2), (e3, 3), (e4, 4)))
    y = Vertex(2, 1, ((e2, 1), (e1, 2), (e4, 3), (e3, 4)))
    edges = {
        e1: ((1, 0), (2, 1)),
        e2: ((1, 1), (2, 0)),
        e3: ((1, 2), (2, 3)),
        e4: ((1, 3), (2, 2)),
    }
    return FatGraph(params, [x, y], edges)
