"""Fat-vertexed labeled graphs as combinatorial maps (rotation systems).

A graph is stored purely as a rotation system: each vertex carries a cyclic
sequence of edge ends, each end annotated with a label in 1..n where n is the
partner-side label count.  Faces and the ambient genus are derived by orbit
tracing, never declared.

Conventions:
  - Label arithmetic is 1-based and cyclic mod n (label n+1 means label 1).
  - A dart is an edge end, addressed as (vertex_id, rotation_position).
  - The corner at (v, p) sits between rotation positions p and p+1 (mod
    valence); its label pair is {label at p, label at p+1}.
  - The corner between consecutive labels i and i+1 (cyclically) is Black
    when i is odd, White when i is even; a swap flag inverts this.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Sequence

Dart = tuple[int, int]  # (vertex id, position in rotation)

BLACK = "Black"
WHITE = "White"


class GraphError(ValueError):
    """Structural error that prevents building a graph at all."""


@dataclass(frozen=True)
class Violation:
    """One validation finding, locatable by vertex/position or edge."""

    kind: str
    message: str
    vertex: Optional[int] = None
    position: Optional[int] = None
    edge: Optional[int] = None

    def to_dict(self) -> dict:
        d: dict = {"kind": self.kind, "message": self.message}
        for k in ("vertex", "position", "edge"):
            v = getattr(self, k)
            if v is not None:
                d[k] = v
        return d


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def first(self) -> Optional[Violation]:
        return self.violations[0] if self.violations else None

    def to_dict(self) -> dict:
        return {"ok": self.ok, "violations": [v.to_dict() for v in self.violations]}


@dataclass(frozen=True)
class GraphParams:
    delta: int
    own_labels: int
    partner_labels: int

    def __post_init__(self) -> None:
        if self.delta < 1 or self.own_labels < 1 or self.partner_labels < 1:
            raise GraphError("graph parameters must be positive")

    @property
    def valence(self) -> int:
        return self.delta * self.partner_labels


@dataclass(frozen=True)
class Vertex:
    id: int
    sign: int  # +1 (parallel class) or -1 (anti-parallel class)
    rotation: tuple[tuple[int, int], ...]  # (edge id, label) per position

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise GraphError(f"vertex {self.id}: sign must be +1 or -1")

    @property
    def valence(self) -> int:
        return len(self.rotation)

    def label_at(self, pos: int) -> int:
        return self.rotation[pos % len(self.rotation)][1]

    def edge_at(self, pos: int) -> int:
        return self.rotation[pos % len(self.rotation)][0]


@dataclass(frozen=True)
class Surface:
    genus: int


@dataclass(frozen=True)
class Face:
    """A face-tracing orbit.

    `boundary` lists the darts of the orbit in traversal order; `corners`
    lists the corner (v, p) crossed after each dart.  `size` counts edge
    sides, i.e. len(boundary).
    """

    id: int
    boundary: tuple[Dart, ...]
    corners: tuple[Dart, ...]

    @property
    def size(self) -> int:
        return len(self.boundary)


@dataclass(frozen=True)
class EdgeClass:
    """A parallelism class: edges joined by chains of bigon faces."""

    edges: frozenset[int]


def corner_color(lower_label: int, t: int, swap: bool = False) -> str:
    """Color of the corner between labels lower_label and lower_label+1 (mod t).

    Black when the lower label is odd, White when even; `swap` inverts.
    """
    black = lower_label % 2 == 1
    if swap:
        black = not black
    return BLACK if black else WHITE


class FatGraph:
    """Immutable combinatorial map with labeled edge ends.

    Construction validates the purely structural axioms (every edge end
    belongs to exactly one rotation slot and one edge; valence condition;
    labels in range).  Label ordering and parity are checked by the
    free functions below, which report violations rather than raise.
    """

    def __init__(
        self,
        params: GraphParams,
        vertices: Sequence[Vertex],
        edges: Mapping[int, tuple[Dart, Dart]],
        color_swap: bool = False,
    ) -> None:
        self.params = params
        self.vertices = tuple(sorted(vertices, key=lambda v: v.id))
        self.edges = dict(edges)
        self.color_swap = color_swap
        self._vertex_by_id = {v.id: v for v in self.vertices}
        if len(self._vertex_by_id) != len(self.vertices):
            raise GraphError("duplicate vertex ids")
        self._validate_structure()
        self._faces: Optional[tuple[Face, ...]] = None
        self._face_of_corner: Optional[dict[Dart, int]] = None
        self._classes: Optional[tuple[EdgeClass, ...]] = None

    # -- structure ---------------------------------------------------------

    def _validate_structure(self) -> None:
        seen: dict[Dart, int] = {}
        for v in self.vertices:
            if v.valence != self.params.valence:
                raise GraphError(
                    f"vertex {v.id}: rotation length {v.valence} != "
                    f"delta*partner_labels = {self.params.valence}"
                )
            for p, (eid, lab) in enumerate(v.rotation):
                if not 1 <= lab <= self.params.partner_labels:
                    raise GraphError(
                        f"vertex {v.id} position {p}: label {lab} out of range"
                    )
                if eid not in self.edges:
                    raise GraphError(
                        f"vertex {v.id} position {p}: unknown edge {eid}"
                    )
                seen[(v.id, p)] = eid
        for eid, (d0, d1) in self.edges.items():
            for d in (d0, d1):
                if seen.get(d) != eid:
                    raise GraphError(f"edge {eid}: dangling end {d}")
        ends = sorted([d for e in self.edges.values() for d in e])
        if len(set(ends)) != len(ends):
            raise GraphError("an edge end is shared by two edges")
        if len(ends) != len(seen):
            raise GraphError("some rotation slot belongs to no edge")

    def vertex(self, vid: int) -> Vertex:
        return self._vertex_by_id[vid]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def other_end(self, d: Dart) -> Dart:
        eid = self._vertex_by_id[d[0]].edge_at(d[1])
        d0, d1 = self.edges[eid]
        return d1 if d == d0 else d0

    def darts(self) -> Iterator[Dart]:
        for v in self.vertices:
            for p in range(v.valence):
                yield (v.id, p)

    def next_at_vertex(self, d: Dart) -> Dart:
        v = self._vertex_by_id[d[0]]
        return (d[0], (d[1] + 1) % v.valence)

    # -- faces -------------------------------------------------------------

    def trace_faces(self) -> tuple[Face, ...]:
        """All face orbits of the map.

        The face permutation is: cross the current edge, then advance one
        step in the rotation at the far vertex.  The corner recorded with
        each step is the one swept at the far vertex.
        """
        if self._faces is not None:
            return self._faces
        unused = {d for d in self.darts()}
        faces: list[Face] = []
        face_of_corner: dict[Dart, int] = {}
        while unused:
            start = min(unused)
            boundary: list[Dart] = []
            corners: list[Dart] = []
            d = start
            while True:
                unused.discard(d)
                boundary.append(d)
                far = self.other_end(d)
                corners.append(far)
                face_of_corner[far] = len(faces)
                d = self.next_at_vertex(far)
                if d == start:
                    break
            faces.append(Face(len(faces), tuple(boundary), tuple(corners)))
        self._faces = tuple(faces)
        self._face_of_corner = face_of_corner
        return self._faces

    def face_at_corner(self, corner: Dart) -> int:
        """Id of the face whose boundary sweeps the given corner."""
        self.trace_faces()
        assert self._face_of_corner is not None
        return self._face_of_corner[corner]

    @property
    def ambient(self) -> Surface:
        f = len(self.trace_faces())
        chi = self.vertex_count - self.edge_count + f
        if chi % 2 != 0 or chi > 2:
            raise GraphError(f"impossible Euler characteristic {chi}")
        return Surface(genus=(2 - chi) // 2)

    def face_census(self) -> dict[int, int]:
        """Map face size -> number of faces of that size."""
        census: dict[int, int] = {}
        for f in self.trace_faces():
            census[f.size] = census.get(f.size, 0) + 1
        return census

    def corner_label_pair(self, corner: Dart) -> tuple[int, int]:
        v = self._vertex_by_id[corner[0]]
        return (v.label_at(corner[1]), v.label_at(corner[1] + 1))

    def corner_color(self, corner: Dart) -> Optional[str]:
        """Color of a corner, when its labels are cyclically consecutive."""
        a, b = self.corner_label_pair(corner)
        t = self.params.partner_labels
        if b % t == (a + 1) % t:
            return corner_color(a, t, self.color_swap)
        if a % t == (b + 1) % t:
            return corner_color(b, t, self.color_swap)
        return None

    # -- parallelism -------------------------------------------------------

    def edge_classes(self) -> tuple[EdgeClass, ...]:
        """Partition of edges: two edges are parallel iff joined by a chain
        of bigon faces."""
        if self._classes is not None:
            return self._classes
        parent = {eid: eid for eid in self.edges}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for f in self.trace_faces():
            if f.size == 2:
                e0 = self._vertex_by_id[f.boundary[0][0]].edge_at(f.boundary[0][1])
                e1 = self._vertex_by_id[f.boundary[1][0]].edge_at(f.boundary[1][1])
                ra, rb = find(e0), find(e1)
                if ra != rb:
                    parent[ra] = rb
        groups: dict[int, set[int]] = {}
        for eid in self.edges:
            groups.setdefault(find(eid), set()).add(eid)
        self._classes = tuple(
            EdgeClass(frozenset(g)) for _, g in sorted(groups.items())
        )
        return self._classes

    def edge_label_pair(self, eid: int) -> tuple[int, int]:
        d0, d1 = self.edges[eid]
        l0 = self._vertex_by_id[d0[0]].label_at(d0[1])
        l1 = self._vertex_by_id[d1[0]].label_at(d1[1])
        return (l0, l1) if l0 <= l1 else (l1, l0)

    def edge_vertices(self, eid: int) -> tuple[int, int]:
        d0, d1 = self.edges[eid]
        return (d0[0], d1[0])

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "delta": self.params.delta,
            "own_labels": self.params.own_labels,
            "partner_labels": self.params.partner_labels,
            "vertices": [
                {
                    "id": v.id,
                    "sign": "+" if v.sign == 1 else "-",
                    "rotation": [
                        {"edge": e, "label": l} for (e, l) in v.rotation
                    ],
                }
                for v in self.vertices
            ],
            "edges": [
                {"id": eid, "ends": [list(d0), list(d1)]}
                for eid, (d0, d1) in sorted(self.edges.items())
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False) + "\n"

    @staticmethod
    def from_dict(data: dict, color_swap: bool = False) -> "FatGraph":
        try:
            params = GraphParams(
                delta=int(data["delta"]),
                own_labels=int(data["own_labels"]),
                partner_labels=int(data["partner_labels"]),
            )
            vertices = []
            for vd in data["vertices"]:
                sign = {"+": 1, "-": -1}[vd["sign"]]
                rot = tuple(
                    (int(s["edge"]), int(s["label"])) for s in vd["rotation"]
                )
                vertices.append(Vertex(int(vd["id"]), sign, rot))
        except (KeyError, TypeError) as exc:
            raise GraphError(f"malformed graph document: {exc}") from exc
        # Edge ends are resolved by position in the rotations; a declared
        # `ends` field, if present, must agree.
        found: dict[int, list[Dart]] = {}
        for v in vertices:
            for p, (eid, _lab) in enumerate(v.rotation):
                found.setdefault(eid, []).append((v.id, p))
        edges: dict[int, tuple[Dart, Dart]] = {}
        for ed in data.get("edges", []):
            eid = int(ed["id"])
            occ = found.get(eid, [])
            if len(occ) != 2:
                raise GraphError(
                    f"edge {eid}: appears {len(occ)} times in rotations, need 2"
                )
            declared = ed.get("ends")
            if declared is not None:
                decl = sorted((int(a), int(b)) for a, b in declared)
                if decl != sorted(occ):
                    raise GraphError(f"edge {eid}: declared ends disagree "
                                     f"with rotations")
            edges[eid] = (occ[0], occ[1])
        for eid, occ in found.items():
            if eid not in edges:
                if len(occ) != 2:
                    raise GraphError(
                        f"edge {eid}: appears {len(occ)} times in rotations"
                    )
                edges[eid] = (occ[0], occ[1])
        return FatGraph(params, vertices, edges, color_swap=color_swap)

    @staticmethod
    def loads(text: str, color_swap: bool = False) -> "FatGraph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphError(f"not valid JSON: {exc}") from exc
        return FatGraph.from_dict(data, color_swap=color_swap)

    @staticmethod
    def load(path: str, color_swap: bool = False) -> "FatGraph":
        with open(path, "r", encoding="utf-8") as fh:
            return FatGraph.loads(fh.read(), color_swap=color_swap)


def build_graph(data: dict) -> FatGraph:
    """Build and structurally validate a graph from a parsed document."""
    return FatGraph.from_dict(data)


# -- label ordering --------------------------------------------------------


def validate_labels(g: FatGraph) -> ValidationReport:
    """Check the Delta-fold in-order label condition at every vertex.

    Around a +vertex the labels advance 1,2,...,n cyclically; around a
    -vertex they descend.  A violation at position p means the step from
    position p to p+1 breaks the progression; the smallest such p per
    vertex is reported (label-range errors are reported at their own
    position).
    """
    n = g.params.partner_labels
    out: list[Violation] = []
    for v in g.vertices:
        bad_range = None
        for p in range(v.valence):
            lab = v.label_at(p)
            if not 1 <= lab <= n:
                bad_range = (p, lab)
                break
        if bad_range is not None:
            p, lab = bad_range
            out.append(
                Violation("label-range", f"label {lab} out of 1..{n}",
                          vertex=v.id, position=p)
            )
            continue
        step = 1 if v.sign == 1 else -1
        for p in range(v.valence):
            cur = v.label_at(p)
            nxt = v.label_at(p + 1)
            want = (cur - 1 + step) % n + 1
            if nxt != want:
                out.append(
                    Violation(
                        "label-order",
                        f"label {nxt} follows {cur}, expected {want}",
                        vertex=v.id,
                        position=p,
                    )
                )
                break
    return ValidationReport(tuple(out))


# -- parity rule -----------------------------------------------------------


def check_parity_rule(
    gq: FatGraph,
    gf: FatGraph,
    corr: Mapping[int, int],
) -> ValidationReport:
    """Check sign(x)sign(y) = -sign(a)sign(b) for every corresponding edge.

    `corr` maps edge ids of gq to edge ids of gf.  Consistency demanded
    first: an edge with ends labeled a,b at gq vertices x,y must correspond
    to an edge with ends labeled x,y at gf vertices a,b.
    """
    out: list[Violation] = []
    if sorted(corr.keys()) != sorted(gq.edges.keys()) or sorted(
        corr.values()
    ) != sorted(gf.edges.keys()):
        return ValidationReport(
            (Violation("correspondence", "edge correspondence is not a bijection"),)
        )
    for eq, ef in sorted(corr.items()):
        (x, px), (y, py) = gq.edges[eq]
        a_lab = gq.vertex(x).label_at(px)
        b_lab = gq.vertex(y).label_at(py)
        (va, pa), (vb, pb) = gf.edges[ef]
        fa_lab = gf.vertex(va).label_at(pa)
        fb_lab = gf.vertex(vb).label_at(pb)
        if sorted((va, vb)) != sorted((a_lab, b_lab)) or sorted(
            (fa_lab, fb_lab)
        ) != sorted((x, y)):
            out.append(
                Violation(
                    "correspondence",
                    f"edge {eq}<->{ef}: ends labeled {a_lab},{b_lab} at "
                    f"vertices {x},{y} vs ends labeled {fa_lab},{fb_lab} at "
                    f"vertices {va},{vb}",
                    edge=eq,
                )
            )
            continue
        sq = gq.vertex(x).sign * gq.vertex(y).sign
        sf = gf.vertex(va).sign * gf.vertex(vb).sign
        if sq != -sf:
            out.append(
                Violation(
                    "parity",
                    f"edge {eq}: sign product {sq} on one side, {sf} on the "
                    f"other; must be opposite",
                    edge=eq,
                )
            )
    return ValidationReport(tuple(out))


def check_no_parallel_same_label(gf: FatGraph) -> ValidationReport:
    """Report every (edge class, vertex, label) where two parallel edges
    meet the same vertex at the same label."""
    out: list[Violation] = []
    for ci, cls in enumerate(gf.edge_classes()):
        seen: dict[tuple[int, int], int] = {}
        for eid in sorted(cls.edges):
            for d in gf.edges[eid]:
                key = (d[0], gf.vertex(d[0]).label_at(d[1]))
                if key in seen and seen[key] != eid:
                    out.append(
                        Violation(
                            "parallel-same-label",
                            f"edges {seen[key]} and {eid} are parallel and "
                            f"both meet vertex {key[0]} at label {key[1]}",
                            vertex=key[0],
                            edge=eid,
                        )
                    )
                else:
                    seen[key] = eid
    return ValidationReport(tuple(out))
