"""Exact-arithmetic census of web corners: phi-vectors, alpha weights,
vertex types, special vertices, and the summation identities they obey.

All arithmetic uses exact rationals; strict inequalities are never
tolerance-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Optional, Sequence

from sgk.webs import Web


@dataclass(frozen=True)
class PhiVector:
    """Finitely supported census (phi_2, phi_3, ...); phi_1 is always 0."""

    entries: tuple[int, ...]  # entries[0] = phi_2
    delta: int
    t: int

    def __post_init__(self) -> None:
        if any(e < 0 for e in self.entries):
            raise ValueError("phi entries must be non-negative")
        if sum(self.entries) > self.delta * self.t:
            raise ValueError("sum of phi entries exceeds delta*t")

    def get(self, i: int) -> int:
        if i < 2:
            return 0
        idx = i - 2
        return self.entries[idx] if idx < len(self.entries) else 0

    @property
    def total(self) -> int:
        return sum(self.entries)

    def is_ordinary_total(self) -> bool:
        return self.total == self.delta * self.t


@dataclass(frozen=True)
class VertexType:
    """[k_2, ..., k_m]: prefix-exact on k_2..k_{m-1}, last entry at-least."""

    ks: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.ks) < 1 or any(k < 0 for k in self.ks):
            raise ValueError("type needs non-negative entries, m >= 2")

    def __str__(self) -> str:
        return "[" + ",".join(str(k) for k in self.ks) + "]"


def phi(w: Web, v: int) -> PhiVector:
    """Census of ordinary corners of v by the size of their face."""
    if v not in {x.id for x in w.vertices}:
        raise ValueError(f"vertex {v} not in web")
    t = w.params.partner_labels
    counts: dict[int, int] = {}
    vert = w.vertex(v)
    if not w.edges:
        return PhiVector((), w.params.delta, t)
    outside, _ = w.outside_face_id()
    faces = {f.id: f for f in w.trace_faces()}
    for p in range(vert.valence):
        fid = w.face_at_corner((v, p))
        if fid == outside:
            continue
        size = faces[fid].size
        counts[size] = counts.get(size, 0) + 1
    if not counts:
        return PhiVector((), w.params.delta, t)
    top = max(counts)
    return PhiVector(
        tuple(counts.get(i, 0) for i in range(2, top + 1)), w.params.delta, t
    )


def alpha(N: int, rho: PhiVector | Sequence[int]) -> Fraction:
    """alpha_N(rho) = sum_{i=2..N} ((N-i)/i) rho_i, exactly."""
    if N < 2:
        raise ValueError("weight N must be >= 2")
    entries = rho.entries if isinstance(rho, PhiVector) else tuple(rho)
    total = Fraction(0)
    for i in range(2, N + 1):
        idx = i - 2
        val = entries[idx] if idx < len(entries) else 0
        total += Fraction(N - i, i) * val
    return total


def special_threshold(N: int, delta: int, t: int) -> Fraction:
    return Fraction(N - 2, 2) * delta * t - N


def is_special(v_phi: PhiVector, N: int) -> bool:
    """Strict inequality alpha_N(phi) > (N-2)/2 * Delta t - N, exactly."""
    return alpha(N, v_phi) > special_threshold(N, v_phi.delta, v_phi.t)


def has_type(rho: PhiVector | Sequence[int], ty: VertexType) -> bool:
    entries = rho.entries if isinstance(rho, PhiVector) else tuple(rho)

    def get(i: int) -> int:
        return entries[i - 2] if 0 <= i - 2 < len(entries) else 0

    ks = ty.ks
    m = len(ks) + 1  # ks[0] constrains rho_2, last constrains rho_m
    for i in range(2, m):
        if get(i) != ks[i - 2]:
            return False
    return get(m) >= ks[-1]


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    detail: dict


def expected_types(N: int, delta: int, t: int) -> tuple[VertexType, ...]:
    """The type disjunction a special vertex of weight N must satisfy."""
    dt = delta * t
    if N == 3:
        return (VertexType((dt - 5,)),)
    if N == 4:
        return (
            VertexType((dt - 5, 4)),
            VertexType((dt - 4, 1)),
            VertexType((dt - 3,)),
        )
    raise ValueError("type disjunctions are established for N in {3, 4}")


def verify_type_lemma(N: int, delta: int, t: int) -> VerificationResult:
    """Exhaustively check: every special rho satisfies the type disjunction.

    Only rho_2..rho_N can contribute to alpha_N, and the disjunction for
    N in {3,4} constrains only rho_2, rho_3; entries above N neither help
    a vector become special nor break any of the listed types, so sweeping
    supports within 2..N with sum <= Delta*t is a complete check.
    """
    if delta < 3:
        raise ValueError("lemma hypotheses need delta >= 3")
    dt = delta * t
    types = expected_types(N, delta, t)
    checked = 0
    realized: set[tuple[int, ...]] = set()
    ranges = [range(dt + 1)] * (N - 1)  # rho_2 .. rho_N
    for combo in product(*ranges):
        if sum(combo) > dt:
            continue
        checked += 1
        rho = PhiVector(tuple(combo), delta, t)
        if not is_special(rho, N):
            continue
        if not any(has_type(rho, ty) for ty in types):
            return VerificationResult(
                False,
                {
                    "counterexample": list(combo),
                    "alpha": str(alpha(N, rho)),
                    "threshold": str(special_threshold(N, delta, t)),
                },
            )
        for ty in types:
            if has_type(rho, ty):
                realized.add(ty.ks)
    return VerificationResult(
        True,
        {
            "N": N,
            "delta": delta,
            "t": t,
            "checked": checked,
            "types": sorted(str(VertexType(ks)) for ks in realized),
        },
    )


def web_face_census(w: Web) -> dict:
    """F_i (all faces), Fbar_i (ordinary faces), k (outside face size).

    k counts edge sides of the outside face, not corners; with ghost
    slots present the outside face sweeps more corners than it has sides.
    """
    outside, _ = w.outside_face_id()
    f_all: dict[int, int] = {}
    f_ord: dict[int, int] = {}
    k = 0
    for f in w.trace_faces():
        f_all[f.size] = f_all.get(f.size, 0) + 1
        if f.id == outside:
            k = f.size
        else:
            f_ord[f.size] = f_ord.get(f.size, 0) + 1
    return {"F": f_all, "Fbar": f_ord, "k": k, "outside": outside}


def verify_counting_identities(
    w: Web, weights: Iterable[int] = (2, 3, 4)
) -> VerificationResult:
    """Exact checks of the face/corner identities and the summed
    special-vertex lower bound.

    Checks: F = sum F_i = 1 + sum Fbar_i; 2E = sum i F_i;
    i*Fbar_i = sum_v phi_i(v); and for each requested N,
    sum_v alpha_N(phi(v)) >= ((N-2)/2*Delta*t - N)*V + (k + N - (N-2)/2*l).
    """
    if not w.edges:
        return VerificationResult(True, {"degenerate": "edgeless web"})
    census = web_face_census(w)
    failures: dict = {}
    faces = w.trace_faces()
    f_total = len(faces)
    if f_total != sum(census["F"].values()):
        failures["F-sum"] = (f_total, census["F"])
    if f_total != 1 + sum(census["Fbar"].values()):
        failures["F-ordinary"] = (f_total, census["Fbar"])
    two_e = sum(i * n for i, n in census["F"].items())
    if two_e != 2 * w.edge_count:
        failures["2E"] = (two_e, 2 * w.edge_count)
    phis = {v.id: phi(w, v.id) for v in w.vertices}
    sizes = set(census["Fbar"]) | {
        i for p in phis.values() for i in range(2, len(p.entries) + 2)
    }
    for i in sorted(sizes):
        lhs = i * census["Fbar"].get(i, 0)
        rhs = sum(p.get(i) for p in phis.values())
        if lhs != rhs:
            failures[f"corner-count-{i}"] = (lhs, rhs)
    delta, t = w.params.delta, w.params.partner_labels
    V, ell, k = w.vertex_count, w.ghost_count, census["k"]
    for N in weights:
        lhs = sum((alpha(N, p) for p in phis.values()), Fraction(0))
        rhs = special_threshold(N, delta, t) * V + (
            k + N - Fraction(N - 2, 2) * ell
        )
        if lhs < rhs:
            failures[f"bound-N{N}"] = (str(lhs), str(rhs))
    if failures:
        return VerificationResult(False, {"failures": failures})
    return VerificationResult(
        True, {"k": k, "ell": ell, "V": V, "E": w.edge_count}
    )
