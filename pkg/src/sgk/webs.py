"""Webs: connected sub-graphs of parallel vertices with ghost accounting.

A web stores, per vertex, the full rotation of slots; a slot either carries
an edge of the web or is a ghost (its host edge, if any, leaves the web).
Webs can be built standalone (generators, golden instances) or as views of
a host graph.  Faces of a web are orbits of the sub-map that skips ghost
slots; the outside face is the one meeting the ghost slots (or, with a
host, the one whose complementary region holds every outside vertex).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from sgk.fatgraph import Dart, FatGraph, GraphError, GraphParams


@dataclass(frozen=True)
class WebVertex:
    id: int
    sign: int
    # slot = (edge id or None for a ghost, label)
    rotation: tuple[tuple[Optional[int], int], ...]

    @property
    def valence(self) -> int:
        return len(self.rotation)

    def label_at(self, pos: int) -> int:
        return self.rotation[pos % len(self.rotation)][1]

    def edge_at(self, pos: int) -> Optional[int]:
        return self.rotation[pos % len(self.rotation)][0]


@dataclass(frozen=True)
class WebFace:
    id: int
    boundary: tuple[Dart, ...]  # matched darts in traversal order
    corners: tuple[Dart, ...]  # every corner slot swept (ghost gaps included)
    ghosts: tuple[Dart, ...]  # ghost slots passed over

    @property
    def size(self) -> int:
        return len(self.boundary)


class Web:
    def __init__(
        self,
        params: GraphParams,
        vertices: Sequence[WebVertex],
        g: int = 2,
        host: Optional[FatGraph] = None,
    ) -> None:
        self.params = params
        self.g = g
        self.host = host
        self.vertices = tuple(sorted(vertices, key=lambda v: v.id))
        self._by_id = {v.id: v for v in self.vertices}
        if len(self._by_id) != len(self.vertices):
            raise GraphError("duplicate web vertex ids")
        ends: dict[int, list[Dart]] = {}
        for v in self.vertices:
            if v.valence != params.valence:
                raise GraphError(
                    f"web vertex {v.id}: valence {v.valence} != {params.valence}"
                )
            for p, (eid, _lab) in enumerate(v.rotation):
                if eid is not None:
                    ends.setdefault(eid, []).append((v.id, p))
        for eid, occ in ends.items():
            if len(occ) != 2:
                raise GraphError(f"web edge {eid}: {len(occ)} ends, need 2")
        self.edges: dict[int, tuple[Dart, Dart]] = {
            eid: (occ[0], occ[1]) for eid, occ in ends.items()
        }
        self._faces: Optional[tuple[WebFace, ...]] = None
        self._face_of_corner: dict[Dart, int] = {}

    # -- construction ------------------------------------------------------

    @staticmethod
    def from_host(
        host: FatGraph,
        vertex_ids: Iterable[int],
        edge_ids: Optional[Iterable[int]] = None,
        g: int = 2,
    ) -> "Web":
        vset = set(vertex_ids)
        if edge_ids is None:  # induced: every host edge inside the vertex set
            eset = {
                eid
                for eid, (d0, d1) in host.edges.items()
                if d0[0] in vset and d1[0] in vset
            }
        else:
            eset = set(edge_ids)
            for eid in eset:
                d0, d1 = host.edges[eid]
                if d0[0] not in vset or d1[0] not in vset:
                    raise GraphError(f"web edge {eid} leaves the vertex set")
        verts = []
        for vid in sorted(vset):
            hv = host.vertex(vid)
            rot = tuple(
                (eid if eid in eset else None, lab) for (eid, lab) in hv.rotation
            )
            verts.append(WebVertex(vid, hv.sign, rot))
        return Web(host.params, verts, g=g, host=host)

    def vertex(self, vid: int) -> WebVertex:
        return self._by_id[vid]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    # -- ghosts ------------------------------------------------------------

    def ghost_slots(self) -> tuple[Dart, ...]:
        out = []
        for v in self.vertices:
            for p, (eid, _lab) in enumerate(v.rotation):
                if eid is None:
                    out.append((v.id, p))
        return tuple(out)

    @property
    def ghost_count(self) -> int:
        return len(self.ghost_slots())

    @property
    def ghost_bound(self) -> int:
        # a g-web on the far-side surface of genus g admits at most
        # t + 2g - 2 ghost labels
        return self.params.partner_labels + 2 * self.g - 2

    # -- connectivity / parallelism ---------------------------------------

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        seen = {self.vertices[0].id}
        frontier = [self.vertices[0].id]
        adj: dict[int, set[int]] = {}
        for d0, d1 in self.edges.values():
            adj.setdefault(d0[0], set()).add(d1[0])
            adj.setdefault(d1[0], set()).add(d0[0])
        while frontier:
            v = frontier.pop()
            for u in adj.get(v, ()):
                if u not in seen:
                    seen.add(u)
                    frontier.append(u)
        return len(seen) == len(self.vertices)

    def all_parallel(self) -> bool:
        return len({v.sign for v in self.vertices}) <= 1

    # -- face tracing ------------------------------------------------------

    def other_end(self, d: Dart) -> Dart:
        eid = self._by_id[d[0]].edge_at(d[1])
        assert eid is not None
        d0, d1 = self.edges[eid]
        return d1 if d == d0 else d0

    def _advance(self, d: Dart) -> tuple[Dart, list[Dart], list[Dart]]:
        """From an arrival dart, sweep to the next matched slot.

        Returns (next matched dart, corners swept, ghost slots passed).
        """
        v = self._by_id[d[0]]
        corners = []
        ghosts = []
        p = d[1]
        for _ in range(v.valence):
            corners.append((v.id, p))
            p = (p + 1) % v.valence
            if v.edge_at(p) is None:
                ghosts.append((v.id, p))
            else:
                return (v.id, p), corners, ghosts
        raise GraphError(f"vertex {v.id} has no matched slots")

    def trace_faces(self) -> tuple[WebFace, ...]:
        if self._faces is not None:
            return self._faces
        unused = {d for e in self.edges.values() for d in e}
        faces: list[WebFace] = []
        while unused:
            start = min(unused)
            boundary: list[Dart] = []
            corners: list[Dart] = []
            ghosts: list[Dart] = []
            d = start
            while True:
                unused.discard(d)
                boundary.append(d)
                far = self.other_end(d)
                nxt, cs, gs = self._advance(far)
                for c in cs:
                    self._face_of_corner[c] = len(faces)
                corners.extend(cs)
                ghosts.extend(gs)
                d = nxt
                if d == start:
                    break
            faces.append(
                WebFace(len(faces), tuple(boundary), tuple(corners), tuple(ghosts))
            )
        self._faces = tuple(faces)
        return self._faces

    def face_at_corner(self, corner: Dart) -> int:
        self.trace_faces()
        return self._face_of_corner[corner]

    def genus(self) -> Optional[int]:
        """Genus of the web as a closed map (ghosts forgotten), when the
        web is connected and has at least one edge."""
        if not self.edges or not self.is_connected():
            return None
        chi = self.vertex_count - self.edge_count + len(self.trace_faces())
        if chi % 2 != 0:
            return None
        return (2 - chi) // 2

    # -- outside face ------------------------------------------------------

    def outside_face_id(self) -> tuple[Optional[int], bool]:
        """(face id or None, unique flag).

        With ghosts present the outside face is the unique ghost-bearing
        orbit (None if that orbit is not unique).  A ghostless web leaves
        the choice open; the largest face (smallest id on ties) is
        designated and flagged non-unique.
        """
        if not self.edges:
            return None, True
        faces = self.trace_faces()
        ghostly = [f for f in faces if f.ghosts]
        if self.ghost_count > 0:
            if len(ghostly) == 1:
                return ghostly[0].id, True
            return None, False
        best = max(faces, key=lambda f: (f.size, -f.id))
        return best.id, len(faces) == 1

    # -- host-side region analysis ----------------------------------------

    def host_regions(self) -> Optional[list[dict]]:
        """Complementary regions of the web inside the host surface.

        Host faces are merged across every non-web edge and around every
        non-web vertex.  Each region reports its faces, its Euler
        characteristic, and the outside vertices it contains.
        """
        if self.host is None:
            return None
        host = self.host
        host_faces = host.trace_faces()
        parent = {f.id: f.id for f in host_faces}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a: int, b: int) -> None:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        web_vids = set(self._by_id)
        removed_edges = [e for e in host.edges if e not in self.edges]
        removed_vertices = [v.id for v in host.vertices if v.id not in web_vids]
        edge_sides: dict[int, list[int]] = {}
        for f in host_faces:
            for d in f.boundary:
                edge_sides.setdefault(host.vertex(d[0]).edge_at(d[1]), []).append(
                    f.id
                )
        for eid in removed_edges:
            sides = edge_sides[eid]
            union(sides[0], sides[1])
        corner_face = {
            c: f.id for f in host_faces for c in f.corners
        }
        for vid in removed_vertices:
            val = host.vertex(vid).valence
            first = corner_face[(vid, 0)]
            for p in range(1, val):
                union(first, corner_face[(vid, p)])
        groups: dict[int, dict] = {}
        for f in host_faces:
            r = find(f.id)
            groups.setdefault(r, {"faces": set(), "vertices": set(), "edges": set()})
            groups[r]["faces"].add(f.id)
        for eid in removed_edges:
            groups[find(edge_sides[eid][0])]["edges"].add(eid)
        for vid in removed_vertices:
            groups[find(corner_face[(vid, 0)])]["vertices"].add(vid)
        regions = []
        for key in sorted(groups):
            gdat = groups[key]
            chi = len(gdat["vertices"]) - len(gdat["edges"]) + len(gdat["faces"])
            regions.append(
                {
                    "faces": frozenset(gdat["faces"]),
                    "vertices": frozenset(gdat["vertices"]),
                    "edges": frozenset(gdat["edges"]),
                    "chi": chi,
                }
            )
        return regions

    # -- serialization -----------------------------------------------------

    def certificate(self) -> dict:
        outside, unique = self.outside_face_id()
        if self.host is not None:
            disk = self._host_disk()
            disk_faces = sorted(disk) if disk is not None else None
        else:
            disk_faces = sorted(
                f.id for f in self.trace_faces() if f.id != outside
            )
        return {
            "vertices": [v.id for v in self.vertices],
            "edges": sorted(self.edges),
            "ghosts": [list(d) for d in self.ghost_slots()],
            "disk_faces": disk_faces,
            "outside_face": outside,
            "outside_unique": unique,
        }

    def _host_disk(self) -> Optional[frozenset[int]]:
        """Host faces forming the greatness disk, if one exists."""
        regions = self.host_regions()
        if regions is None:
            return None
        if not regions:  # web is the whole host
            return None
        outsiders = {
            v.id for v in self.host.vertices if v.id not in self._by_id
        }
        cands = [
            r
            for r in regions
            if r["chi"] == 1 and outsiders <= r["vertices"]
        ]
        if not cands:
            return None
        # deterministic pick: largest region, then smallest face-id set
        cands.sort(key=lambda r: (-len(r["faces"]), sorted(r["faces"])))
        r_out = cands[0]
        all_faces = {f.id for f in self.host.trace_faces()}
        return frozenset(all_faces - r_out["faces"])


@dataclass(frozen=True)
class GreatWebResult:
    ok: bool
    reason: Optional[str]
    certificate: Optional[dict]


def ghost_count(w: Web) -> int:
    return w.ghost_count


def is_great_gweb(w: Web) -> GreatWebResult:
    """Greatness checks in order: connectivity, parallelism, ghost bound,
    qualifying disk."""
    if not w.is_connected():
        return GreatWebResult(False, "not connected", None)
    if not w.all_parallel():
        return GreatWebResult(False, "vertices not mutually parallel", None)
    if w.ghost_count > w.ghost_bound:
        return GreatWebResult(
            False,
            f"ghost count {w.ghost_count} exceeds bound {w.ghost_bound}",
            None,
        )
    if not w.edges:
        # a single vertex bounded by a small disk around itself
        if w.vertex_count == 1:
            return GreatWebResult(True, None, w.certificate())
        return GreatWebResult(False, "not connected", None)
    if w.host is not None:
        disk = w._host_disk()
        if disk is None:
            return GreatWebResult(False, "no qualifying disk", None)
        return GreatWebResult(True, None, w.certificate())
    # standalone: must embed in a disk with all ghosts on the boundary
    if w.genus() != 0:
        return GreatWebResult(False, "no qualifying disk", None)
    outside, _unique = w.outside_face_id()
    ghostly = [f for f in w.trace_faces() if f.ghosts]
    if w.ghost_count > 0 and (len(ghostly) != 1 or outside is None):
        return GreatWebResult(False, "ghost slots on more than one face", None)
    return GreatWebResult(True, None, w.certificate())


def find_great_web(gq: FatGraph, g: int = 2) -> Optional[Web]:
    """Search connected same-sign sub-graphs of the host for a great g-web.

    Returns a web of maximal vertex count (ties: smallest vertex-id set);
    intended for small hosts, the search is exponential in V.
    """
    from itertools import combinations

    vids = [v.id for v in gq.vertices]
    best: Optional[Web] = None
    best_key: Optional[tuple] = None
    for size in range(len(vids), 0, -1):
        for combo in combinations(sorted(vids), size):
            signs = {gq.vertex(v).sign for v in combo}
            if len(signs) != 1:
                continue
            w = Web.from_host(gq, combo, g=g)
            res = is_great_gweb(w)
            if res.ok:
                key = (-len(combo), tuple(sorted(combo)))
                if best_key is None or key < best_key:
                    best, best_key = w, key
        if best is not None:
            return best
    return best


@dataclass(frozen=True)
class LambdaX:
    web: Web
    label: int
    edges: frozenset[int]
    ghost_x: int


def lambda_x(w: Web, x: int) -> LambdaX:
    if not 1 <= x <= w.params.partner_labels:
        raise GraphError(f"label {x} out of range")
    edges = set()
    ghost_x = 0
    for v in w.vertices:
        for p, (eid, lab) in enumerate(v.rotation):
            if lab != x:
                continue
            if eid is None:
                ghost_x += 1
            else:
                edges.add(eid)
    return LambdaX(w, x, frozenset(edges), ghost_x)


def lambda_x_subweb(w: Web, x: int) -> Web:
    lx = lambda_x(w, x)
    verts = []
    for v in w.vertices:
        rot = tuple(
            (eid if eid in lx.edges else None, lab) for (eid, lab) in v.rotation
        )
        verts.append(WebVertex(v.id, v.sign, rot))
    return Web(w.params, verts, g=w.g, host=w.host)


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    detail: dict


def check_bigon_abundance(w: Web) -> VerificationResult:
    """Either every label's sub-web contains a bigon face inside the disk,
    or the web has a single vertex (with t = g - 1 in the governed range)."""
    if w.params.delta < 3:
        return VerificationResult(
            False, {"inapplicable": "hypothesis needs delta >= 3"}
        )
    t = w.params.partner_labels
    if w.vertex_count == 1 and (t == w.g - 1 or not w.edges):
        return VerificationResult(True, {"branch": "single-vertex"})
    outside, _ = w.outside_face_id()
    inner_corners = set()
    for f in w.trace_faces():
        if f.id != outside:
            inner_corners.update(f.corners)
    missing = []
    for x in range(1, t + 1):
        sub = lambda_x_subweb(w, x)
        found = False
        for f in sub.trace_faces():
            if f.size == 2 and all(c in inner_corners for c in f.corners):
                found = True
                break
        if not found:
            missing.append(x)
    if missing and w.vertex_count == 1:
        return VerificationResult(True, {"branch": "single-vertex"})
    if missing:
        return VerificationResult(
            False, {"branch": "bigon-per-label", "labels_without_bigon": missing}
        )
    return VerificationResult(True, {"branch": "bigon-per-label"})
