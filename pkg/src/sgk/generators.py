"""Instance generators: random rotation systems, parity-consistent
graph pairs, and great-web families built from bundle diagrams.

Bundle diagrams give the exhaustively enumerable slice of web space: V
fat vertices in cyclic order inside a disk, every edge part of a bundle
of parallel edges between cyclically adjacent vertices.  Greatness forces
this shape for the ghost accounting we need (ghost slots buried inside a
nested matching would leave the outside face), so sweeping bundle sizes
and label cuts covers all great webs of this vertex count up to the
symmetries the checks are invariant under.
"""

from __future__ import annotations

import random
from typing import Iterator, Optional

from sgk.fatgraph import FatGraph, GraphParams, Vertex
from sgk.webs import Web, WebVertex, is_great_gweb


# -- random rotation systems ------------------------------------------------


def _connected(v_count: int, ends) -> bool:
    adj: dict[int, set[int]] = {v: set() for v in range(1, v_count + 1)}
    for d0, d1 in ends:
        adj[d0[0]].add(d1[0])
        adj[d1[0]].add(d0[0])
    seen = {1}
    stack = [1]
    while stack:
        for u in adj[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == v_count


def random_rotation_system(
    rng: random.Random, max_v: int = 8, max_e: int = 24
) -> FatGraph:
    """A structurally valid random map: uniform pairing of darts.

    Valence is delta * t with delta = 1, so any even dart total works;
    labels run in order around every vertex, which keeps validate_labels
    happy without constraining the pairing.
    """
    while True:
        v_count = rng.randint(1, max_v)
        t = rng.choice([2, 4, 6])
        if v_count * t % 2 == 0 and v_count * t // 2 <= max_e:
            break
    params = GraphParams(delta=1, own_labels=t, partner_labels=t)
    while True:
        darts = [(v, p) for v in range(1, v_count + 1) for p in range(t)]
        rng.shuffle(darts)
        edges = {
            i: (darts[2 * i], darts[2 * i + 1]) for i in range(len(darts) // 2)
        }
        if _connected(v_count, edges.values()):
            break
    slot_edge: dict[tuple[int, int], int] = {}
    for eid, (d0, d1) in edges.items():
        slot_edge[d0] = eid
        slot_edge[d1] = eid
    verts = []
    for v in range(1, v_count + 1):
        sign = rng.choice([1, -1])
        labels = (
            [1 + p % t for p in range(t)]
            if sign == 1
            else [1 + (-p) % t for p in range(t)]
        )
        rot = tuple((slot_edge[(v, p)], labels[p]) for p in range(t))
        verts.append(Vertex(v, sign, rot))
    return FatGraph(params, verts, edges)


# -- parity-consistent pairs ------------------------------------------------


def far_sign_coloring(gq: FatGraph) -> Optional[dict[int, int]]:
    """Signs for the partner-side vertices satisfying the parity rule,
    or None when the instance admits none."""
    t = gq.params.partner_labels
    sign: dict[int, int] = {}
    adj: dict[int, list[tuple[int, int]]] = {a: [] for a in range(1, t + 1)}
    for eid, (d0, d1) in gq.edges.items():
        a = gq.vertex(d0[0]).label_at(d0[1])
        b = gq.vertex(d1[0]).label_at(d1[1])
        want = -gq.vertex(d0[0]).sign * gq.vertex(d1[0]).sign
        if a == b:
            if want == -1:
                return None
            continue
        adj[a].append((b, want))
        adj[b].append((a, want))
    for root in range(1, t + 1):
        if root in sign:
            continue
        sign[root] = 1
        stack = [root]
        while stack:
            a = stack.pop()
            for b, want in adj[a]:
                expect = sign[a] * want
                if b in sign:
                    if sign[b] != expect:
                        return None
                else:
                    sign[b] = expect
                    stack.append(b)
    return sign


def derive_far_graph(
    gq: FatGraph,
) -> Optional[tuple[FatGraph, dict[int, int]]]:
    """Partner-side graph and edge correspondence for gq, when the parity
    rule admits one.  Near vertex ids must be 1..u; edge ids are shared.

    Slot filling: the k-th end labeled a at near vertex x (in rotation
    order) lands in the k-th slot labeled x at far vertex a.
    """
    u = gq.vertex_count
    ids = sorted(v.id for v in gq.vertices)
    if ids != list(range(1, u + 1)):
        raise ValueError("near vertex ids must be 1..u for far derivation")
    signs = far_sign_coloring(gq)
    if signs is None:
        return None
    t = gq.params.partner_labels
    delta = gq.params.delta
    # per (far vertex, near vertex): queue of edge ids in rotation order
    queues: dict[tuple[int, int], list[int]] = {}
    for v in gq.vertices:
        for p in range(v.valence):
            queues.setdefault((v.label_at(p), v.id), []).append(v.edge_at(p))
    far_params = GraphParams(delta=delta, own_labels=t, partner_labels=u)
    verts = []
    for a in range(1, t + 1):
        sgn = signs[a]
        labels = (
            [1 + p % u for p in range(delta * u)]
            if sgn == 1
            else [1 + (-p) % u for p in range(delta * u)]
        )
        taken: dict[int, int] = {}
        rot = []
        for lab in labels:
            q = queues.get((a, lab), [])
            k = taken.get(lab, 0)
            if k >= len(q):
                return None  # near side does not meet label a delta times
            rot.append((q[k], lab))
            taken[lab] = k + 1
        verts.append(Vertex(a, sgn, tuple(rot)))
    found: dict[int, list[tuple[int, int]]] = {}
    for v in verts:
        for p, (eid, _lab) in enumerate(v.rotation):
            found.setdefault(eid, []).append((v.id, p))
    if any(len(occ) != 2 for occ in found.values()):
        return None
    far_edges = {eid: (occ[0], occ[1]) for eid, occ in found.items()}
    gf = FatGraph(far_params, verts, far_edges)
    return gf, {e: e for e in gq.edges}


# -- bundle-diagram webs ----------------------------------------------------


def bundle_web(
    delta: int, t: int, sizes: tuple[int, ...], cuts: tuple[int, ...]
) -> Optional[Web]:
    """Web from a cyclic bundle diagram.

    Vertex i carries slots 0..delta*t-1 with labels starting at cuts[i];
    bundle i (sizes[i] edges) joins the last slots of vertex i to the
    first slots of vertex i+1, innermost to outermost.  Returns None when
    a vertex has too few slots for its two bundles.
    """
    v_count = len(cuts)
    if len(sizes) != v_count:
        raise ValueError("need one bundle size per cyclic gap")
    n = delta * t
    for i in range(v_count):
        if sizes[i - 1] + sizes[i] > n:
            return None
    slots: list[list[Optional[int]]] = [[None] * n for _ in range(v_count)]
    eid = 0
    for i in range(v_count):
        j = (i + 1) % v_count
        for k in range(sizes[i]):
            slots[i][n - sizes[i] + k] = eid
            slots[j][sizes[i] - 1 - k] = eid
            eid += 1
    verts = []
    for i in range(v_count):
        rot = tuple(
            (slots[i][p], 1 + (cuts[i] + p) % t) for p in range(n)
        )
        verts.append(WebVertex(i, 1, rot))
    try:
        return Web(GraphParams(delta, t, t), verts, g=2)
    except Exception:
        return None


def _edge_labels_distinct(w: Web) -> bool:
    for d0, d1 in w.edges.values():
        if w.vertex(d0[0]).label_at(d0[1]) == w.vertex(d1[0]).label_at(d1[1]):
            return False
    return True


def exhaustive_great_webs(
    delta: int = 3, t: int = 4, vmax: int = 3, realizable: bool = True
) -> Iterator[Web]:
    """All great 2-webs arising from bundle diagrams with at most vmax
    vertices, label cuts swept modulo t."""
    n = delta * t
    bound = t + 2  # ghost bound at g = 2
    for v_count in range(2, vmax + 1):
        min_edges = (v_count * n - bound + 1) // 2
        size_ranges = _size_tuples(v_count, n, min_edges)
        for sizes in size_ranges:
            for cuts in _cut_tuples(v_count, t):
                w = bundle_web(delta, t, sizes, cuts)
                if w is None:
                    continue
                if realizable and not _edge_labels_distinct(w):
                    continue
                if is_great_gweb(w).ok:
                    yield w


def _size_tuples(
    v_count: int, n: int, min_edges: int
) -> Iterator[tuple[int, ...]]:
    def rec(prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if len(prefix) == v_count:
            total = sum(prefix)
            if total >= min_edges and all(
                prefix[i - 1] + prefix[i] <= n for i in range(v_count)
            ):
                # connectivity: the nonzero bundles must span the cycle
                nonzero = sum(1 for s in prefix if s)
                if nonzero >= v_count - 1:
                    yield tuple(prefix)
            return
        for s in range(n + 1):
            prefix.append(s)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([])


def _cut_tuples(v_count: int, t: int) -> Iterator[tuple[int, ...]]:
    def rec(prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if len(prefix) == v_count:
            yield tuple(prefix)
            return
        for c in range(t):
            prefix.append(c)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([])


def random_great_web(
    rng: random.Random,
    delta: int = 3,
    t: int = 4,
    vmax: int = 6,
    tries: int = 200,
    realizable: bool = True,
) -> Optional[Web]:
    n = delta * t
    bound = t + 2
    for _ in range(tries):
        v_count = rng.randint(2, vmax)
        min_edges = (v_count * n - bound + 1) // 2
        sizes = tuple(rng.randint(0, n // 2 + 2) for _ in range(v_count))
        if sum(sizes) < min_edges:
            continue
        cuts = tuple(rng.randrange(t) for _ in range(v_count))
        w = bundle_web(delta, t, sizes, cuts)
        if w is None:
            continue
        if realizable and not _edge_labels_distinct(w):
            continue
        if is_great_gweb(w).ok:
            return w
    return None
