"""Case calculus over circular corner sequences at a special vertex.

A corner sequence is a circular word of length Delta*t whose position p
sits at the corner between labels lower(p) and lower(p)+1 (cyclically),
where lower(p) = ((p-1) mod t) + 1.  Symbols:

  B bigon (unrefined)   S bigon that is a Scharlemann cycle
  M mixed bigon         T trigon
  g gap (unrefined)     G true gap

Bigon refinement is not free: the edges of a maximal run of consecutive
bigons are mutually parallel, their labels ascend at the vertex and
descend at the far ends, and an edge joins an odd label to an even label
(Parity Rule with alternating far-side vertex classes).  Hence each run
carries an odd phase c mod t, the i-th bigon of the run is an SC exactly
when 2i+1 = c (mod t), and a mixed bigon's far label pair is its corner
pair shifted by c-2i-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Iterator, Optional, Sequence

from sgk.fatgraph import corner_color

BIGONS = ("B", "S", "M")
GAPS = ("g", "T", "G")


@dataclass(frozen=True)
class CaseContext:
    name: str
    delta: int
    t: int
    situation: str  # "no-scc" | "scc" | "nonor" | "esc+sc"
    color_swap: bool = False
    rotation_step: int = 2  # symmetry: rotate by multiples of this
    reflection: bool = True

    @property
    def n(self) -> int:
        return self.delta * self.t


@dataclass(frozen=True)
class Run:
    start: int  # position of first bigon
    length: int
    phase: int  # odd residue mod t


class CornerSequence:
    """A (partially or fully refined) circular assignment.

    `word` holds one symbol per position; `phases` maps run-start
    positions of refined runs to their phase.  Fully refined sequences
    use only S,M,T,G; S/M symbols must agree with the run phases.
    """

    def __init__(
        self,
        ctx: CaseContext,
        word: Sequence[str],
        phases: Optional[dict[int, int]] = None,
    ) -> None:
        if len(word) != ctx.n:
            raise ValueError(f"word length {len(word)} != {ctx.n}")
        for s in word:
            if s not in BIGONS + GAPS:
                raise ValueError(f"bad symbol {s!r}")
        self.ctx = ctx
        self.word = tuple(word)
        self.phases = dict(phases or {})
        self._runs: Optional[tuple[Run, ...]] = None
        self._check_phases()

    # -- basic geometry ----------------------------------------------------

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def t(self) -> int:
        return self.ctx.t

    def sym(self, p: int) -> str:
        return self.word[p % self.n]

    def is_bigon(self, p: int) -> bool:
        return self.sym(p) in BIGONS

    def is_gap(self, p: int) -> bool:
        return self.sym(p) in GAPS

    def lower(self, p: int) -> int:
        return ((p % self.n) - 1) % self.t + 1

    def pair(self, p: int) -> tuple[int, int]:
        lo = self.lower(p)
        return (lo, lo % self.t + 1)

    def color(self, p: int) -> str:
        return corner_color(self.lower(p), self.t, self.ctx.color_swap)

    # -- runs and phases ---------------------------------------------------

    def runs(self) -> tuple[Run, ...]:
        """Maximal runs of consecutive bigons, with phases where known."""
        if self._runs is not None:
            return self._runs
        n = self.n
        if all(self.is_bigon(p) for p in range(n)):
            starts = [0]
            lengths = [n]
        else:
            starts = [
                p for p in range(n) if self.is_bigon(p) and self.is_gap(p - 1)
            ]
            lengths = []
            for s in starts:
                ln = 0
                while self.is_bigon(s + ln):
                    ln += 1
                lengths.append(ln)
        out = []
        for s, ln in zip(starts, lengths):
            out.append(Run(s, ln, self.phases.get(s, 0)))
        self._runs = tuple(out)
        return self._runs

    def run_of(self, p: int) -> Optional[Run]:
        p %= self.n
        for r in self.runs():
            for i in range(r.length):
                if (r.start + i) % self.n == p:
                    return r
        return None

    def _check_phases(self) -> None:
        for r in self.runs():
            if r.start not in self.phases:
                continue
            c = self.phases[r.start]
            if c % 2 != 1:
                raise ValueError("run phase must be odd mod t")
            for i in range(r.length):
                want = "S" if (2 * i + 1) % self.t == c % self.t else "M"
                have = self.sym(r.start + i)
                if have != "B" and have != want:
                    raise ValueError(
                        f"symbol {have} at {r.start + i} disagrees with "
                        f"phase {c}"
                    )

    def far_pair(self, p: int) -> Optional[tuple[int, int]]:
        """Label pair of a bigon at the far ends of its two edges; None
        when the run phase is unassigned."""
        r = self.run_of(p)
        if r is None or r.start not in self.phases:
            return None
        i = (p - r.start) % self.n
        c = self.phases[r.start]
        a = self.lower(r.start)
        lo = (a + c - i - 2) % self.t + 1  # lower far label b0 - i - 1
        return (lo, lo % self.t + 1)

    # -- matching ----------------------------------------------------------

    @staticmethod
    def _match_sym(pattern_char: str, sym: str) -> bool:
        if pattern_char == "B":
            return sym in BIGONS
        if pattern_char == "g":
            return sym in GAPS
        return sym == pattern_char

    def match_at(self, pattern: str, p: int, rev: bool = False) -> bool:
        step = -1 if rev else 1
        return all(
            self._match_sym(pattern[k], self.sym(p + step * k))
            for k in range(len(pattern))
        )

    def find(self, pattern: str, both_directions: bool = True) -> list[
        tuple[int, bool]
    ]:
        """All (start position, reversed?) circular matches of a pattern."""
        out = []
        for p in range(self.n):
            if self.match_at(pattern, p, rev=False):
                out.append((p, False))
            if both_directions and self.match_at(pattern, p, rev=True):
                out.append((p, True))
        return out

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for s in self.word:
            out[s] = out.get(s, 0) + 1
        return out

    def sc_positions(self) -> list[int]:
        return [p for p in range(self.n) if self.sym(p) == "S"]

    def esc_runs(self) -> list[Run]:
        """Runs that contain an ESC: a bigon triple with central SC (the
        four delineating edges are mutually parallel with matching labels)."""
        out = []
        for r in self.runs():
            for i in range(1, r.length - 1):
                if self.sym(r.start + i) == "S":
                    out.append(r)
                    break
        return out

    # -- symmetry ----------------------------------------------------------

    def _key(self) -> tuple:
        ph = tuple(
            self.phases.get(r.start, 0) % self.t for r in self.runs()
        )
        return (self.word, ph)

    def rotate(self, k: int) -> "CornerSequence":
        n = self.n
        word = tuple(self.word[(p + k) % n] for p in range(n))
        phases = {}
        for r in self.runs():
            if r.start in self.phases:
                phases[(r.start - k) % n] = self.phases[r.start]
        return CornerSequence(self.ctx, word, phases)

    def reflect(self) -> "CornerSequence":
        """Reverse the reading direction about position 0.  Together with
        the label reversal this implies, corner pairs map to corner pairs
        of the same color; the SC at run index i moves to index L-1-i, so
        a run phase c becomes 2L-c mod t (odd since t is even)."""
        n = self.n
        word = tuple(self.word[(-p) % n] for p in range(n))
        phases = {}
        for r in self.runs():
            if r.start in self.phases:
                c_new = (2 * r.length - self.phases[r.start]) % self.t
                phases[(n - r.start - r.length + 1) % n] = c_new
        return CornerSequence(self.ctx, word, phases)

    def symmetry_orbit(self) -> Iterator["CornerSequence"]:
        step = self.ctx.rotation_step
        for k in range(0, self.n, step):
            rot = self.rotate(k)
            yield rot
            if self.ctx.reflection:
                yield rot.reflect()

    def canonical_key(self) -> tuple:
        return min(s._key() for s in self.symmetry_orbit())

    def __str__(self) -> str:
        return "".join(self.word)

    def to_dict(self) -> dict:
        return {
            "word": "".join(self.word),
            "phases": {str(k): v for k, v in sorted(self.phases.items())},
            "context": self.ctx.name,
        }


# -- rules -----------------------------------------------------------------


@dataclass(frozen=True)
class Rule:
    id: str
    scope: tuple[str, ...]  # context names where the rule applies
    pattern: str  # human-readable pattern / predicate description
    citation: str  # quoted statement this rule encodes
    check: Callable[[CornerSequence], Optional[str]] = field(compare=False)
    # annotations that must be supplied for the rule to apply (e.g. a
    # trigon known to bound a type II forked configuration)
    needs: tuple[str, ...] = ()

    def applicable(
        self, seq: CornerSequence, annotations: frozenset[str] = frozenset()
    ) -> bool:
        if seq.ctx.name not in self.scope:
            return False
        return all(a in annotations for a in self.needs)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "scope": list(self.scope),
            "pattern": self.pattern,
            "citation": self.citation,
        }


@dataclass(frozen=True)
class Admissibility:
    ok: bool
    violated: Optional[str] = None  # rule id
    detail: Optional[str] = None
    skipped: tuple[str, ...] = ()


def admissible(
    seq: CornerSequence,
    rules: Sequence[Rule],
    annotations: frozenset[str] = frozenset(),
) -> Admissibility:
    skipped = []
    for rule in rules:
        if not rule.applicable(seq, annotations):
            skipped.append(rule.id)
            continue
        detail = rule.check(seq)
        if detail is not None:
            return Admissibility(False, rule.id, detail, tuple(skipped))
    return Admissibility(True, skipped=tuple(skipped))


# -- enumeration -----------------------------------------------------------


def _phase_choices(t: int) -> tuple[int, ...]:
    return tuple(c for c in range(1, 2 * t, 2) if c < t) or (1,)


def _gap_position_words(n: int, gap_count: int) -> Iterator[tuple[int, ...]]:
    for gaps in combinations(range(n), gap_count):
        yield gaps


def enumerate_admissible(
    ctx: CaseContext,
    vtype: Sequence[int],
    rules: Sequence[Rule],
    collect_closed: Optional[list] = None,
) -> list[CornerSequence]:
    """All fully refined sequences realizing the vertex type and passing
    every applicable rule, up to the context's symmetry group.

    The type [k2] requires at least k2 bigons; [k2, k3] requires exactly
    k2 bigons and at least k3 trigons; remaining gaps are true gaps.
    When `collect_closed` is given, each rejected representative is
    appended as (sequence, rule id, detail).
    """
    n = ctx.n
    t = ctx.t
    k2 = vtype[0]
    if len(vtype) == 1:
        bigon_counts = range(k2, n + 1)
        min_trigons = 0
    elif len(vtype) == 2:
        bigon_counts = [k2]
        min_trigons = vtype[1]
    else:
        raise ValueError("types beyond [k2] and [k2,k3] are not replayed")
    seen: set = set()
    out: list[CornerSequence] = []
    for nb in bigon_counts:
        ng = n - nb
        for gaps in _gap_position_words(n, ng):
            gapset = set(gaps)
            base = ["B" if p not in gapset else "g" for p in range(n)]
            # quotient early on the unrefined gap pattern
            coarse = CornerSequence(ctx, base)
            ck = coarse.canonical_key()
            if ck in seen:
                continue
            seen.add(ck)
            # rules never match refined symbols against B or g, so a
            # violation at the unrefined level survives every refinement
            verdict = admissible(coarse, rules)
            if not verdict.ok:
                if collect_closed is not None:
                    collect_closed.append(
                        (coarse, verdict.violated, verdict.detail)
                    )
                continue
            run_starts = [r.start for r in coarse.runs()]
            run_lens = {r.start: r.length for r in coarse.runs()}
            refined_seen: set = set()
            for nt in range(min_trigons, ng + 1):
                for tpos in combinations(gaps, nt):
                    word1 = list(base)
                    for p in gaps:
                        word1[p] = "T" if p in tpos else "G"
                    mid = CornerSequence(ctx, word1)
                    verdict = admissible(mid, rules)
                    if not verdict.ok:
                        if collect_closed is not None:
                            collect_closed.append(
                                (mid, verdict.violated, verdict.detail)
                            )
                        continue
                    for phases in product(
                        _phase_choices(t), repeat=len(run_starts)
                    ):
                        word2 = list(word1)
                        phmap = {}
                        for s, c in zip(run_starts, phases):
                            phmap[s] = c
                            for i in range(run_lens[s]):
                                word2[(s + i) % n] = (
                                    "S" if (2 * i + 1) % t == c % t else "M"
                                )
                        seq = CornerSequence(ctx, word2, phmap)
                        key = seq.canonical_key()
                        if key in refined_seen:
                            continue
                        refined_seen.add(key)
                        verdict = admissible(seq, rules)
                        if verdict.ok:
                            out.append(seq)
                        elif collect_closed is not None:
                            collect_closed.append(
                                (seq, verdict.violated, verdict.detail)
                            )
    out.sort(key=lambda s: s._key())
    return out
