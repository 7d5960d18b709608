"""Detection of Scharlemann cycles and their extended and forked variants.

All detectors run on a labeled FatGraph (normally the sphere-side graph).
A Scharlemann cycle (SC) is a disk face whose edges all carry the same
label pair {a, a+1 mod t} and whose vertices are mutually parallel.  An
n-ESC is a run of 2(n+1) adjacent parallel edges delineating 2n+1 bigons
whose central bigon is a length-2 SC; a forked variant trades the bigon a
one end of the run for a trigon hanging off the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from sgk.fatgraph import BLACK, WHITE, FatGraph, corner_color


@dataclass(frozen=True)
class ScharlemannCycle:
    face: int
    length: int
    label_pair: tuple[int, int]  # (a, b) with b = a+1 mod t
    vertices: tuple[int, ...]
    color: str

    def to_dict(self) -> dict:
        return {
            "face": self.face,
            "length": self.length,
            "label_pair": list(self.label_pair),
            "vertices": list(self.vertices),
            "color": self.color,
        }


@dataclass(frozen=True)
class EscRecord:
    order: int  # an n-ESC; a 0-ESC is its SC viewed as a run of 2 edges
    corner: tuple[int, ...]  # contiguous label run along one vertex
    core: ScharlemannCycle
    core_labels: tuple[int, int]
    label_set: frozenset[int]
    proper: bool
    boundary_pairs: tuple[tuple[int, int], ...]  # edge-id pairs, outermost last
    edges: tuple[int, ...]  # the 2(n+1) run edges in chain order
    bigons: tuple[int, ...]  # the 2n+1 delineated bigon face ids

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "corner": list(self.corner),
            "core_face": self.core.face,
            "core_labels": list(self.core_labels),
            "label_set": sorted(self.label_set),
            "proper": self.proper,
            "boundary_pairs": [list(p) for p in self.boundary_pairs],
            "edges": list(self.edges),
            "bigons": list(self.bigons),
        }


@dataclass(frozen=True)
class FescRecord:
    esc_order: int  # order of the ESC part (n-1 for a forked n-run)
    esc_edges: tuple[int, ...]
    extra_bigon: int  # face id
    trigon: int  # face id
    center: ScharlemannCycle
    outer_pair: tuple[int, int]  # the two edges expected parallel far-side

    def to_dict(self) -> dict:
        return {
            "esc_order": self.esc_order,
            "esc_edges": list(self.esc_edges),
            "extra_bigon": self.extra_bigon,
            "trigon": self.trigon,
            "center_face": self.center.face,
            "outer_pair": list(self.outer_pair),
        }


def _pair_is_consecutive(a: int, b: int, t: int) -> Optional[tuple[int, int]]:
    """Return (x, x+1 mod t) orientation of the pair {a,b} when consecutive."""
    if a % t + 1 == b:
        return (a, b)
    if b % t + 1 == a:
        return (b, a)
    return None


def find_scharlemann_cycles(g: FatGraph) -> tuple[ScharlemannCycle, ...]:
    t = g.params.partner_labels
    out = []
    for f in g.trace_faces():
        pairs = {g.edge_label_pair(g.vertex(d[0]).edge_at(d[1])) for d in f.boundary}
        if len(pairs) != 1:
            continue
        a, b = next(iter(pairs))
        cons = _pair_is_consecutive(a, b, t)
        if cons is None:
            continue
        verts = tuple(sorted({d[0] for d in f.boundary}))
        signs = {g.vertex(v).sign for v in verts}
        if len(signs) != 1:
            continue
        lower = cons[0]
        out.append(
            ScharlemannCycle(
                face=f.id,
                length=f.size,
                label_pair=cons,
                vertices=verts,
                color=corner_color(lower, t, g.color_swap),
            )
        )
    return tuple(out)


def _chains(g: FatGraph) -> list[tuple[list[int], bool]]:
    """Order each parallelism class as a chain e_1..e_m with a bigon between
    consecutive edges.  The flag marks classes whose bigon-adjacency closes
    into a cycle rather than a path; their chain is one arbitrary rotation
    and consumers must scan runs cyclically."""
    adj: dict[int, list[tuple[int, int]]] = {}
    for f in g.trace_faces():
        if f.size != 2:
            continue
        e0 = g.vertex(f.boundary[0][0]).edge_at(f.boundary[0][1])
        e1 = g.vertex(f.boundary[1][0]).edge_at(f.boundary[1][1])
        if e0 == e1:
            continue
        adj.setdefault(e0, []).append((e1, f.id))
        adj.setdefault(e1, []).append((e0, f.id))
    chains = []
    for cls in g.edge_classes():
        edges = sorted(cls.edges)
        if len(edges) == 1:
            chains.append((edges, False))
            continue
        ends = [e for e in edges if len(adj.get(e, [])) == 1]
        start = min(ends) if ends else min(edges)
        chain = [start]
        prev = None
        while True:
            nxts = [e for e, _ in adj.get(chain[-1], []) if e != prev]
            nxts = [e for e in nxts if e not in chain]
            if not nxts:
                break
            prev = chain[-1]
            chain.append(nxts[0])
        cyclic = not ends and _bigon_between(g, chain[-1], chain[0]) is not None
        chains.append((chain, cyclic))
    return chains


def _bigon_between(g: FatGraph, e0: int, e1: int) -> Optional[int]:
    for f in g.trace_faces():
        if f.size != 2:
            continue
        es = {g.vertex(d[0]).edge_at(d[1]) for d in f.boundary}
        if es == {e0, e1}:
            return f.id
    return None


def _sc_by_face(g: FatGraph) -> dict[int, ScharlemannCycle]:
    return {sc.face: sc for sc in find_scharlemann_cycles(g)}


def _run_label(g: FatGraph, edge: int, vertex: int) -> int:
    for d in g.edges[edge]:
        if d[0] == vertex:
            return g.vertex(vertex).label_at(d[1])
    raise ValueError(f"edge {edge} not incident to vertex {vertex}")


def find_escs(g: FatGraph) -> tuple[EscRecord, ...]:
    """Every n-ESC, nested ones included, ordered by (core face, order)."""
    t = g.params.partner_labels
    scs = _sc_by_face(g)
    out: list[EscRecord] = []
    for base, cyclic in _chains(g):
        m = len(base)
        if m < 2:
            continue
        # cyclic classes are scanned on a tripled chain, cores taken from the
        # middle copy, so runs may wrap either way
        chain = base * 3 if cyclic else base
        bigons = [
            _bigon_between(g, chain[i], chain[i + 1])
            for i in range(len(chain) - 1)
        ]
        positions = range(m, 2 * m) if cyclic else range(m - 1)
        for i in positions:
            fid = bigons[i]
            if fid is None or fid not in scs:
                continue
            core = scs[fid]
            if core.length != 2:
                continue
            if cyclic:
                nmax = (m - 2) // 2
            else:
                nmax = min(i, m - 2 - i)
            x = min(core.vertices)
            for n in range(nmax + 1):
                if i - n < 0 or i + 2 + n > len(chain):
                    break
                run = chain[i - n : i + 2 + n]
                faces = bigons[i - n : i + 1 + n]
                if any(f is None for f in faces):
                    break
                # all delineated faces are bigons by chain construction
                labels = tuple(_run_label(g, e, x) for e in run)
                # a genuine ESC run is label-consecutive along the vertex
                steps = {
                    (labels[j + 1] - labels[j]) % t for j in range(len(labels) - 1)
                }
                if steps not in ({1}, {t - 1}):
                    break
                pairs = tuple(
                    (chain[i - k], chain[i + 1 + k]) for k in range(1, n + 1)
                )
                out.append(
                    EscRecord(
                        order=n,
                        corner=labels,
                        core=core,
                        core_labels=core.label_pair,
                        label_set=frozenset(labels),
                        proper=len(set(labels)) == len(labels),
                        boundary_pairs=pairs,
                        edges=tuple(run),
                        bigons=tuple(faces),  # type: ignore[arg-type]
                    )
                )
    out.sort(key=lambda r: (r.core.face, r.order))
    return tuple(out)


def find_fescs(g: FatGraph) -> tuple[FescRecord, ...]:
    """Forked extended Scharlemann cycles.

    For a center SC at chain position i, an esc part of order n-1 spans
    chain[i-(n-1) .. i+n]; the fork adds one more bigon at one end and a
    trigon hanging off the outermost edge of the other end.
    """
    scs = _sc_by_face(g)
    face_by_id = {f.id: f for f in g.trace_faces()}
    edge_faces: dict[int, list[int]] = {}
    for f in g.trace_faces():
        for d in f.boundary:
            edge_faces.setdefault(g.vertex(d[0]).edge_at(d[1]), []).append(f.id)
    out: list[FescRecord] = []
    for base, cyclic in _chains(g):
        m = len(base)
        chain = base * 3 if cyclic else base
        bigons = [
            _bigon_between(g, chain[i], chain[i + 1])
            for i in range(len(chain) - 1)
        ]
        positions = range(m, 2 * m) if cyclic else range(m - 1)
        for i in positions:
            fid = bigons[i]
            if fid is None or fid not in scs or scs[fid].length != 2:
                continue
            core = scs[fid]
            for n in range(1, m):
                lo, hi = i - (n - 1), i + n  # esc part spans chain[lo..hi]
                if lo < 0 or hi > len(chain) - 1:
                    break
                if hi - lo + 1 > m:
                    break
                # (bigon_side, trigon_side): extra bigon continues the run on
                # one end; the trigon hangs off the outermost edge of the
                # other end.
                for bigon_left in (True, False):
                    if bigon_left:
                        if lo - 1 < 0 or hi - lo + 2 > m:
                            continue
                        extra = bigons[lo - 1]
                        outer_bigon_edge = chain[lo - 1]
                        trig_edge = chain[hi]
                    else:
                        if hi + 1 > len(chain) - 1 or hi - lo + 2 > m:
                            continue
                        extra = bigons[hi]
                        outer_bigon_edge = chain[hi + 1]
                        trig_edge = chain[lo]
                    if extra is None:
                        continue
                    inner = {bigons[k] for k in range(lo, hi)}
                    cands = {
                        f
                        for f in edge_faces.get(trig_edge, [])
                        if face_by_id[f].size == 3 and f not in inner
                    }
                    for trig in sorted(cands):
                        trig_edges = [
                            g.vertex(d[0]).edge_at(d[1])
                            for d in face_by_id[trig].boundary
                        ]
                        mate = [
                            e
                            for e in trig_edges
                            if e != trig_edge
                            and g.edge_label_pair(e)
                            == g.edge_label_pair(outer_bigon_edge)
                        ]
                        if not mate:
                            continue
                        out.append(
                            FescRecord(
                                esc_order=n - 1,
                                esc_edges=tuple(chain[lo : hi + 1]),
                                extra_bigon=extra,
                                trigon=trig,
                                center=core,
                                outer_pair=(outer_bigon_edge, min(mate)),
                            )
                        )
    # dedupe
    seen = set()
    uniq = []
    for r in out:
        key = (r.esc_edges, r.extra_bigon, r.trigon, r.center.face)
        if key not in seen:
            seen.add(key)
            uniq.append(r)
    uniq.sort(key=lambda r: (r.center.face, r.esc_order, r.trigon))
    return tuple(uniq)


class FescTypeError(ValueError):
    """Raised when the parallel-pair precondition for typing fails."""


def classify_fesc_type(
    fesc: FescRecord, gq: FatGraph, gf: FatGraph, x: int
) -> str:
    """Type I or II at vertex x, by how many of the outer parallel pair's
    edges are incident to x.

    The two outer edges must be parallel in gf (same edge ids on both
    sides); otherwise classification is refused with a diagnostic.
    """
    e0, e1 = fesc.outer_pair
    cls = [c for c in gf.edge_classes() if e0 in c.edges]
    if not cls or e1 not in cls[0].edges:
        raise FescTypeError(
            f"edges {e0} and {e1} are not parallel far-side; the instance "
            f"contradicts the expected bigon pairing and is flagged"
        )
    count = sum(1 for e in (e0, e1) if x in gq.edge_vertices(e))
    if count == 2:
        return "I"
    if count == 1:
        return "II"
    raise FescTypeError(
        f"neither edge {e0} nor {e1} is incident to vertex {x}; "
        f"type is only defined at a vertex of the configuration"
    )
