"""The shipped rule table for the corner-sequence case calculus.

Each rule encodes one configuration lemma at the sequence level, at the
strength the source argument invokes it.  Pattern rules fire on literal
occurrences (read in both directions around the vertex); cardinality
rules count SC label-pair multiplicities.  Rules never fire on symbols
that are still unrefined (B or g), so they are safe to run on partially
refined sequences.
"""

from __future__ import annotations

from typing import Optional

from sgk.casework import BIGONS, CaseContext, CornerSequence, Rule

# ---------------------------------------------------------------------------
# contexts

# at t=4 the two colors play symmetric roles, so relabeling by any cyclic
# shift (not just even ones) is a sound symmetry
T4_NOSCC = CaseContext(
    name="t4_noscc", delta=3, t=4, situation="no-scc", rotation_step=1
)
T4_SCC = CaseContext(
    name="t4_scc", delta=3, t=4, situation="scc", rotation_step=1
)
NONOR_T6 = CaseContext(name="nonor_t6", delta=3, t=6, situation="nonor")
T6_CASED = CaseContext(
    name="t6_caseD",
    delta=3,
    t=6,
    situation="esc+sc",
    rotation_step=6,
    reflection=False,
)

CONTEXTS = {c.name: c for c in (T4_NOSCC, T4_SCC, NONOR_T6, T6_CASED)}

T4 = ("t4_noscc",)
T4_BOTH = ("t4_noscc", "t4_scc")


# ---------------------------------------------------------------------------
# helpers

def _occurrences(seq: CornerSequence, pattern: str):
    return seq.find(pattern, both_directions=True)


def _window(seq: CornerSequence, p: int, rev: bool, k: int) -> str:
    return seq.sym(p - k if rev else p + k)


def _inner_scs(seq: CornerSequence) -> list[int]:
    """Positions of SCs interior to their bigon run: cores of ESCs."""
    out = []
    for r in seq.runs():
        for i in range(1, r.length - 1):
            if seq.sym(r.start + i) == "S":
                out.append((r.start + i) % seq.n)
    return out


def _sc_pair_counts(seq: CornerSequence) -> dict[tuple[int, int], int]:
    out: dict[tuple[int, int], int] = {}
    for p in seq.sc_positions():
        out[seq.pair(p)] = out.get(seq.pair(p), 0) + 1
    return out


def _partner_pair(seq: CornerSequence, p: int) -> tuple[int, int]:
    """The other corner pair of the same color (t=4 only)."""
    lo = seq.lower(p)
    other = (lo + 1) % seq.t + 1
    return (other, other % seq.t + 1)


def _known_sc_trigons(seq: CornerSequence) -> list[int]:
    """Trigons whose Scharlemann-cycle nature follows from the sequence:
    either the center of a forced (S)MTM(S), or any trigon of an ESC
    core's color (faces of the core's color near an ESC are SCs)."""
    out = []
    esc_colors = {seq.color(p) for p in _inner_scs(seq)}
    for p in range(seq.n):
        if seq.sym(p) != "T":
            continue
        if seq.color(p) in esc_colors:
            out.append(p)
        elif (
            seq.sym(p - 1) == "M"
            and seq.sym(p + 1) == "M"
            and seq.sym(p - 2) == "S"
            and seq.sym(p + 2) == "S"
        ):
            out.append(p)
    return out


def _pair_edges(seq: CornerSequence, pair: tuple[int, int]) -> int:
    """Edges incident to the vertex whose far-end labels are `pair`
    (t=4 model): an SC bigon on the pair gives two, a known SC trigon on
    the pair gives two at this vertex, and every mixed bigon at a corner
    of the opposite color gives one (each of its edges joins a label of
    its corner to the diagonally opposite label)."""
    from sgk.fatgraph import corner_color

    c = corner_color(pair[0], seq.t, seq.ctx.color_swap)
    total = 0
    for p in seq.sc_positions():
        if seq.pair(p) == pair:
            total += 2
    for p in range(seq.n):
        if seq.sym(p) == "M" and seq.color(p) != c:
            total += 1
    for p in _known_sc_trigons(seq):
        if seq.pair(p) == pair:
            total += 2
    return total


# ---------------------------------------------------------------------------
# rule checks, t = 4

def _no_bbbbb(seq):
    for p, rev in seq.find("BBBBB", both_directions=False):
        return f"five consecutive bigons at {p}"
    return None


def _no_bbbbt(seq):
    for p, rev in _occurrences(seq, "BBBBT"):
        return f"four bigons adjacent to a trigon at {p}"
    return None


def _no_bbbb(seq):
    for p, rev in seq.find("BBBB", both_directions=False):
        return f"four consecutive bigons at {p}"
    return None


def _dbft2(seq):
    for p, rev in _occurrences(seq, "BBTBB"):
        syms = "".join(_window(seq, p, rev, k) for k in range(5))
        if "B" in syms:
            continue  # not yet refined
        if syms != "SMTMS":
            return f"BBTBB at {p} refined {syms}, not SMTMS"
    return None


def _l1(seq):
    for p, rev in _occurrences(seq, "MSTB"):
        w4 = _window(seq, p, rev, 3)
        if w4 == "B":
            continue
        if w4 != "S":
            return f"MSTB at {p} with fourth face {w4}"
        w5 = _window(seq, p, rev, 4)
        if w5 in BIGONS or w5 == "g":
            return f"MSTS at {p} followed by {w5}, not G or TG"
        if w5 == "T":
            w6 = _window(seq, p, rev, 5)
            if w6 != "G" and w6 != "g":
                return f"MSTST at {p} followed by {w6}, not G"
    return None


def _l5(seq):
    for p, rev in _occurrences(seq, "MSTTSM"):
        return f"MSTTSM at {p}"
    return None


def _l6(seq):
    counts = seq.counts()
    nb = sum(counts.get(s, 0) for s in BIGONS)
    if nb != 7 or counts.get("T", 0) < 4:
        return None
    if seq.find("TT", both_directions=False) or seq.find(
        "BBB", both_directions=False
    ):
        return None
    for p, rev in _occurrences(seq, "MST"):
        left1 = _window(seq, p, rev, -1)
        left2 = _window(seq, p, rev, -2)
        if left1 != "T" or left2 not in BIGONS:
            return f"MST at {p} not preceded by BT"
        tail = tuple(_window(seq, p, rev, 3 + k) for k in range(3))
        ok = (
            tail[0] in ("G", "g")
            or (tail[0] == "S" and tail[1] in ("G", "g"))
            or (tail[0] == "S" and tail[1] == "T" and tail[2] in ("G", "g"))
        )
        if tail[0] == "B" or (tail[0] == "S" and tail[1] == "B"):
            ok = True  # not yet refined
        if not ok:
            return f"MST at {p} not followed by G, SG, or STG"
    return None


def _fesc_plus_1(seq):
    # needs a type II annotation; gated by Rule.needs
    for p, rev in _occurrences(seq, "MST"):
        nxt = _window(seq, p, rev, 3)
        if nxt in BIGONS or nxt == "T":
            return f"type II FESC trigon at {p} adjacent to {nxt}"
    return None


def _smst(seq):
    for p, rev in _occurrences(seq, "SMST"):
        if _window(seq, p, rev, 4) == "G":
            continue  # type II branch: trigon adjacent to a true gap
        mpos = (p + (-1 if rev else 1)) % seq.n
        mixed_color = seq.color(mpos)
        others = [
            q
            for q in range(seq.n)
            if q != mpos
            and seq.sym(q) == "M"
            and seq.color(q) == mixed_color
        ]
        if len(others) > 1:
            return (
                f"SMST at {p} with {len(others) + 1} {mixed_color} "
                "mixed bigons"
            )
        # a second same-color mixed bigon centered in an SMS forces its
        # parallelism into the forked configuration against the SCs
        for q in others:
            if seq.sym(q - 1) == "S" and seq.sym(q + 1) == "S":
                return (
                    f"SMST at {p} with a {mixed_color} mixed bigon at "
                    f"{q} centered in SMS"
                )
    return None


def _msts(seq):
    for p, rev in _occurrences(seq, "MSTS"):
        mixed_color = seq.color(p)
        opp_mixed = sum(
            1
            for q in range(seq.n)
            if seq.sym(q) == "M" and seq.color(q) == mixed_color
        )
        if opp_mixed > 2:
            return (
                f"MSTS at {p} with {opp_mixed} {mixed_color} mixed bigons"
            )
    return None


def _nfsc2(seq):
    hits = []
    for p, rev in _occurrences(seq, "SMST"):
        hits.append((p, seq.color(p + (-1 if rev else 1))))
    for p, rev in _occurrences(seq, "MSTS"):
        hits.append((p, seq.color(p)))
    for p, opp in hits:
        for q in seq.sc_positions():
            if seq.color(q) == opp:
                return f"configuration at {p} with a {opp} SC at {q}"
    return None


def _smtm(seq):
    n = seq.n
    # (a) literal SMTM whose trigon corner carries another SC: at most
    # four partner-pair edges may meet the vertex
    hyps: list[tuple[int, tuple[int, int]]] = []
    for p, rev in _occurrences(seq, "SMTM"):
        tpos = (p + (-2 if rev else 2)) % n
        if any(
            seq.pair(q) == seq.pair(tpos) for q in seq.sc_positions()
        ):
            hyps.append((tpos, seq.pair(tpos)))
    # (b) a pair carrying both an SC bigon and a known SC trigon
    sc_pairs = {seq.pair(q) for q in seq.sc_positions()}
    for q in _known_sc_trigons(seq):
        if seq.pair(q) in sc_pairs:
            hyps.append((q, seq.pair(q)))
    for tpos, tpair in hyps:
        qpair = _partner_pair(seq, tpos)
        edges = _pair_edges(seq, qpair)
        if edges >= 5:
            return (
                f"SCs of lengths two and three on {tpair} with {edges} "
                f"{qpair}-edges at the vertex"
            )
    # (c) the double-bigon frame around a gap whose own-pair trigon makes
    # the short SC edges span a punctured torus
    for p in range(n):
        for rev in (False, True):
            if not seq.match_at("MSgSM", p, rev):
                continue
            step = -1 if rev else 1
            s_pairs = {
                seq.pair(p + step), seq.pair(p + 3 * step)
            }
            s_color = seq.color(p + step)
            if not any(
                seq.sym(q) == "S" and seq.color(q) != s_color
                for q in range(n)
            ):
                continue
            for q in range(n):
                if seq.sym(q) == "T" and seq.pair(q) in s_pairs:
                    return (
                        f"double-bigon configuration at {p} with a trigon "
                        f"at {q} on an SC corner {seq.pair(q)}"
                    )
    # (d) five near-pair edges against a flanked forked configuration
    for p in range(n):
        for rev in (False, True):
            if not seq.match_at("GSMT", p, rev):
                continue
            step = -1 if rev else 1
            frame = all(
                seq.sym(p + step * k) == "T" for k in (5, 7, 9)
            ) and seq.sym(p + step * 10) == "M" and seq.sym(
                p + step * 11
            ) == "S" and all(
                seq.is_bigon(p + step * k) for k in (4, 6, 8)
            )
            if not frame:
                continue
            if any(seq.sym(p + step * k) == "M" for k in (4, 6, 8)):
                return (
                    f"forked frame at {p} with an extra mixed bigon "
                    "giving a fifth near-pair edge"
                )
    return None


def _three_sc_one_sc(seq):
    counts = _sc_pair_counts(seq)
    for pair, k in counts.items():
        if k < 3:
            continue
        other = _partner_pair(seq, next(
            p for p in seq.sc_positions() if seq.pair(p) == pair
        ))
        if counts.get(other, 0) < 1:
            continue
        extra = _pair_edges(seq, other) - 2
        if extra >= 3:
            return (
                f"three {pair}-SCs, a {other}-SC, and {extra} more "
                f"{other}-edges"
            )
    return None


def _sms_and_sms(seq):
    hits = [p for p, rev in seq.find("SMS", both_directions=False)]
    for i, p in enumerate(hits):
        for q in hits[i + 1:]:
            if p != q and (p - q) % seq.t == 0:
                return f"SMS triples on the same corner at {p} and {q}"
    return None


def _two_esc_two_b(seq):
    if seq.n != 12:
        return None
    for p in range(seq.n):
        if seq.match_at("gMSMgMSMgBgB", p):
            return f"two aligned ESCs with two more bigons at {p}"
    return None


def _esc4(seq):
    for c in _inner_scs(seq):
        color = seq.color(c)
        for q in range(seq.n):
            if seq.color(q) != color:
                continue
            if seq.sym(q) == "M":
                return (
                    f"ESC core at {c} but {color} mixed bigon at {q}"
                )
            # a trigon of the core's color is an SC on the partner
            # pair, so it cannot sit at a corner of the core's pair
            if seq.sym(q) == "T" and seq.pair(q) == seq.pair(c):
                return (
                    f"ESC core at {c} but {color} trigon at {q} on the "
                    f"core pair {seq.pair(c)}"
                )
    return None


def _esc4g(seq):
    for r in seq.runs():
        if not any(
            seq.sym(r.start + i) == "S" for i in range(1, r.length - 1)
        ):
            continue
        if seq.sym(r.start - 1) != "G" and seq.sym(r.start + r.length) != "G":
            return f"ESC in run at {r.start} with no contiguous true gap"
    return None


def _parallel_same_label(seq):
    counts = _sc_pair_counts(seq)
    for c in _inner_scs(seq):
        if counts.get(seq.pair(c), 0) > 2:
            return (
                f"ESC core at {c} with two more SCs on {seq.pair(c)}, "
                "whose edges are mutually parallel"
            )
    return None


def _notwoescs(seq):
    cores = _inner_scs(seq)
    for i, p in enumerate(cores):
        for q in cores[i + 1:]:
            if seq.color(p) == seq.color(q) and seq.pair(p) != seq.pair(q):
                return f"ESC cores at {p} and {q}: same color, labels differ"
    return None


def _esc_fesc(seq):
    cores = _inner_scs(seq)
    if not cores:
        return None
    for p, rev in _occurrences(seq, "MST"):
        s = (p + (-1 if rev else 1)) % seq.n
        for c in cores:
            if seq.color(c) == seq.color(s) and seq.pair(c) != seq.pair(s):
                return (
                    f"ESC core at {c} and FESC SC at {s}: same color, "
                    "labels differ"
                )
    return None


def _dbfg(seq):
    for p in range(seq.n):
        for rev in (False, True):
            if not seq.match_at("MSgSM", p, rev):
                continue
            s_color = seq.color(p + (-1 if rev else 1))
            opp = [
                q for q in seq.sc_positions() if seq.color(q) != s_color
            ]
            if not opp:
                continue
            before = _window(seq, p, rev, -1)
            after = _window(seq, p, rev, 5)
            if before in ("S", "M") or after in ("S", "M"):
                return (
                    f"double-bigon configuration at {p} flanked by a bigon"
                )
    return None


def _two_sc_two_t(seq):
    for p in range(seq.n):
        for rev in (False, True):
            if not seq.match_at("GSMT", p, rev):
                continue
            step = -1 if rev else 1
            frame = all(
                seq.sym(p + step * k) == "T" for k in (5, 7, 9)
            ) and seq.sym(p + step * 10) == "M" and seq.sym(
                p + step * 11
            ) == "S" and seq.is_bigon(p + step * 6)
            if not frame:
                continue
            if seq.sym(p + step * 4) == "S" and seq.sym(p + step * 8) == "S":
                return (
                    f"forked frame at {p} with SCs at both outer "
                    "singleton bigons"
                )
    return None


def _eqspaced81(seq):
    counts = seq.counts()
    nb = sum(counts.get(s, 0) for s in BIGONS)
    if nb != 8 or counts.get("T", 0) < 1:
        return None
    gaps = sorted(p for p in range(seq.n) if seq.is_gap(p))
    if len(gaps) != 4:
        return None
    g0 = gaps[0]
    if all(g % 3 == g0 % 3 for g in gaps):
        return f"equally spaced gaps at {gaps} with a trigon"
    return None


def _scbsc(seq):
    for p in range(seq.n):
        for rev in (False, True):
            if seq.match_at("GSMSGSTMSGSM", p, rev):
                return f"paired SC runs with forked trigon at {p}"
    return None


def _three_disjt_sc(seq):
    pairs = set(_sc_pair_counts(seq))
    for a in pairs:
        for b in pairs:
            for c in pairs:
                if len({*a, *b, *c}) == 6:
                    return f"SCs with disjoint label pairs {a}, {b}, {c}"
    return None


# ---------------------------------------------------------------------------
# rule checks, Situation scc (t = 4)

def _scc_no_s_and_s(seq):
    scs = seq.sc_positions()
    for i, p in enumerate(scs):
        for q in scs[i + 1:]:
            if seq.color(p) == seq.color(q) and seq.pair(p) != seq.pair(q):
                return f"SCs at {p} and {q}: same color, labels differ"
    return None


def _scc_no_bbb(seq):
    for p, rev in seq.find("BBB", both_directions=False):
        return f"three consecutive bigons at {p}"
    return None


def _scc_no_fesc(seq):
    for p, rev in _occurrences(seq, "MST"):
        s = (p + (-1 if rev else 1)) % seq.n
        color, pair = seq.color(s), seq.pair(s)
        for q in range(seq.n):
            if q == s or seq.color(q) != color:
                continue
            if seq.sym(q) == "M":
                return f"FESC SC at {s} but {color} mixed bigon at {q}"
            if seq.sym(q) == "S" and seq.pair(q) != pair:
                return f"FESC SC at {s} but {color} SC at {q} on {seq.pair(q)}"
    return None


# ---------------------------------------------------------------------------
# rule checks, non-orientable t = 6

def _nonor_black_bigons(seq):
    from sgk.fatgraph import BLACK

    for p in range(seq.n):
        if seq.color(p) == BLACK and not seq.is_bigon(p):
            return f"non-bigon at Black corner {p}"
    return None


def _no_white_sc(seq):
    from sgk.fatgraph import WHITE

    for p in seq.sc_positions():
        if seq.color(p) == WHITE:
            return f"White SC at {p}"
    return None


def _bwb(seq):
    from sgk.fatgraph import BLACK

    if seq.find("BBBB", both_directions=False):
        return "more than 4 mutually parallel edges"
    for r in seq.runs():
        if r.length != 3:
            continue
        if seq.color(r.start) != BLACK:
            return f"bigon triple at {r.start} not Black-White-Black"
        if seq.sym(r.start + 1) == "S":
            return f"bigon triple at {r.start} with a White (center) SC"
    return None


def _nonor_trigon_2sc(seq):
    def run_len(p):
        r = seq.run_of(p)
        return r.length if r else 0

    for p in range(seq.n):
        if seq.sym(p) != "T":
            continue
        if run_len(p - 1) == 3 and run_len(p + 1) == 3:
            # only judge refined flanks: an unrefined B may still become S
            if "M" in (seq.sym(p - 1), seq.sym(p + 1)):
                return f"trigon at {p} between triples not flanked by SCs"
    return None


def _nonor_singleton_sc(seq):
    for r in seq.runs():
        if r.length != 1:
            continue
        if seq.sym(r.start - 1) == "T" and seq.sym(r.start + 1) == "T":
            if seq.sym(r.start) == "M":
                return f"singleton bigon at {r.start} between trigons not an SC"
    return None


def _justone12(seq):
    from sgk.fatgraph import BLACK

    counts = _sc_pair_counts(seq)
    black_pairs = {
        seq.pair(p) for p in range(seq.t) if seq.color(p) == BLACK
    }
    for pair, k in counts.items():
        if k < 3 or pair not in black_pairs:
            continue
        others = black_pairs - {pair}
        for q in range(seq.n):
            if seq.sym(q) != "M" or seq.color(q) != BLACK:
                continue
            far = seq.far_pair(q)
            if far is not None and {seq.pair(q), far} == others:
                return (
                    f"three {pair}-SCs with a {seq.pair(q)},{far}-bigon "
                    f"at {q}"
                )
    return None


# ---------------------------------------------------------------------------
# rule checks, t = 6 Case D

def _cased_no_2esc(seq):
    for r in seq.runs():
        for i in range(r.length):
            if seq.sym(r.start + i) == "S" and min(i, r.length - 1 - i) >= 2:
                return f"2-ESC: SC at run index {i} of run at {r.start}"
    return None


def _cased_white_bigons(seq):
    from sgk.fatgraph import WHITE

    for p in range(seq.n):
        if seq.sym(p) != "M" or seq.color(p) != WHITE:
            continue
        far = seq.far_pair(p)
        if far is None:
            continue
        if {seq.pair(p), far} != {(4, 5), (6, 1)}:
            return f"White non-SC bigon at {p} with pairs {seq.pair(p)},{far}"
    return None


def _cased_no_12_34_sc(seq):
    for p in seq.sc_positions():
        if seq.pair(p) in ((1, 2), (3, 4)):
            return f"{seq.pair(p)}-SC at {p}"
    return None


def _cased_23_corners(seq):
    hits = [
        p for p in range(seq.n) if seq.pair(p) == (2, 3) and seq.is_bigon(p)
    ]
    if len(hits) > 2:
        return f"three 23-corners in bigons at {hits}"
    return None


def _cased_nothree4561(seq):
    for p in range(seq.n):
        if seq.lower(p) == 4 and all(seq.is_bigon(p + k) for k in range(3)):
            return f"45,56,61-corners all in bigons from {p}"
    return None


def _cased_trigon23(seq):
    for p in range(seq.n):
        if seq.sym(p) == "T" and seq.pair(p) == (2, 3):
            return f"trigon with a 23-corner at {p}"
    return None


def _cased_seq_of_bigons(seq):
    hits = [p for p in range(seq.n) if seq.pair(p) == (2, 3)]
    with_bigon = [p for p in hits if seq.is_bigon(p)]
    if len(with_bigon) != 2:
        return None
    (other,) = [p for p in hits if p not in with_bigon]
    if seq.is_bigon(other - 1) and seq.is_bigon(other + 1):
        return (
            f"two 23-corner bigons but both corners adjacent to the "
            f"23-corner at {other} are bigons"
        )
    return None


def _cased_endgame(seq):
    full = []
    rest = []
    for p in range(seq.n):
        if seq.lower(p) != 1:
            continue
        if all(seq.is_bigon(p + k) for k in range(3)):
            full.append(p)
        else:
            rest.append(p)
    if len(full) < 2 or not rest:
        return None
    for p in rest:
        if seq.is_bigon(p) or seq.is_bigon(p + 2):
            return (
                f"two full 1234-corner sequences at {full[:2]} with a "
                f"bigon among the 12- and 34-corners of the sequence at {p}"
            )
    return None


# ---------------------------------------------------------------------------
# the table

RULES: tuple[Rule, ...] = (
    Rule(
        id="noBBBBB",
        scope=T4_BOTH,
        pattern="forbid BBBBB",
        citation="There cannot be five consecutive bigons.",
        check=_no_bbbbb,
    ),
    Rule(
        id="noBBBBT",
        scope=T4_BOTH,
        pattern="forbid BBBBT (either direction)",
        citation="There cannot be four bigons adjacent to a trigon.",
        check=_no_bbbbt,
    ),
    Rule(
        id="noBBBB",
        scope=T4,
        pattern="forbid BBBB at a special vertex",
        citation=(
            "If Delta=3 then a special vertex x of Lambda cannot have BBBB."
        ),
        check=_no_bbbb,
    ),
    Rule(
        id="dbft2",
        scope=T4,
        pattern="BBTBB must refine to SMTMS",
        citation=(
            "BBTBB ==> SMTMS. In particular, the T is a Scharlemann cycle."
        ),
        check=_dbft2,
    ),
    Rule(
        id="L1",
        scope=T4,
        pattern="MSTB ==> MSTSG or MSTSTG",
        citation="MSTB ==> MSTSG or MSTSTG.",
        check=_l1,
    ),
    Rule(
        id="L5",
        scope=T4,
        pattern="forbid MSTTSM",
        citation="MSTTSM cannot occur.",
        check=_l5,
    ),
    Rule(
        id="L6",
        scope=T4,
        pattern="at type [7,4] with no TT and no BBB: MST ==> BTMST{G|SG|STG}",
        citation=(
            "At a vertex of type [7,4], if no TT and no BBB then MST ==> "
            "BTMST{G, SG, STG}."
        ),
        check=_l6,
    ),
    Rule(
        id="fesc+1",
        scope=T4_BOTH,
        pattern="a type II FESC trigon admits only a true gap beyond",
        citation=(
            "MST_II ==> MSTG. At a vertex x, the trigon of a type II FESC "
            "cannot be further adjacent to another bigon or a trigon."
        ),
        check=_fesc_plus_1,
        needs=("fesc-type-II",),
    ),
    Rule(
        id="SMST",
        scope=T4,
        pattern=(
            "SMST (type I side, else the trigon needs a true gap beyond): "
            "at most one more mixed bigon of the M's color"
        ),
        citation=(
            "Assume there is an SMST configuration incident to vertex x for "
            "which the MST is a type I FESC. ... there is at most one more "
            "Black mixed bigon incident to x, other than f and that in the "
            "given FESC."
        ),
        check=_smst,
    ),
    Rule(
        id="MSTS",
        scope=T4,
        pattern="MSTS: at most one more mixed bigon of the M's color",
        citation=(
            "Assume there is an MSTS configuration incident to vertex x. "
            "... there is at most one more Black mixed bigon incident to x."
        ),
        check=_msts,
    ),
    Rule(
        id="NFSC2",
        scope=T4,
        pattern="SMST or MSTS: no SC of the opposite color",
        citation=(
            "Assume G_Q has a configuration SMST where WLOG the SCs are on "
            "the White side. Then G_Q contains no Black SC. The same "
            "conclusion holds for the configuration MSTS."
        ),
        check=_nfsc2,
    ),
    Rule(
        id="SMTM",
        scope=T4,
        pattern=(
            "SMTM with another SC on the trigon's corner: the paired SCs "
            "bar two more partner-pair edges or a punctured-torus placement"
        ),
        citation=(
            "Assume that at a vertex, x, of G_Q there is a configuration "
            "SMTM and another S on the same corner as the T. ... there "
            "cannot be two more 41-edges incident to x."
        ),
        check=_smtm,
    ),
    Rule(
        id="2SC2T",
        scope=T4,
        pattern=(
            "in the forked frame GSMT.T.T.TMS, the two outer singleton "
            "bigons cannot both be SCs"
        ),
        citation=(
            "Given a 12-SC, a 34-SC, a trigon of Lambda with two "
            "12-corners and one 34-corner, and a trigon of Lambda with two "
            "34-corners and one 12-corner, then either a pair of 12-edges "
            "or a pair of 34-edges must be parallel."
        ),
        check=_two_sc_two_t,
    ),
    Rule(
        id="3SC+1SC+3e",
        scope=T4,
        pattern=(
            "three same-pair SCs, a partner-pair SC, and three more "
            "partner-pair edges force a parallelism"
        ),
        citation=(
            "Given three 12-SCs, one 34-SC, and three more 34-edges, then "
            "either three of the six 12-edges are parallel in G_F or three "
            "of the five 34-edges are parallel in G_F."
        ),
        check=_three_sc_one_sc,
    ),
    Rule(
        id="SMSandSMS",
        scope=T4,
        pattern="forbid two SMS triples on the same corner",
        citation=(
            "There cannot be two triples of SMS on the same corner at a "
            "vertex of Lambda."
        ),
        check=_sms_and_sms,
    ),
    Rule(
        id="2ESC+2B",
        scope=T4,
        pattern="forbid gMSMgMSMgBgB",
        citation=(
            "If Delta=3, then at a vertex of Lambda there cannot be two "
            "1234-ESCs and bigons at the remaining 12- and 34-corners. That "
            "is, there cannot be the configuration gMSMgMSMgBgB."
        ),
        check=_two_esc_two_b,
    ),
    Rule(
        id="esc4",
        scope=T4,
        pattern="with an ESC, every bigon of the core's color is an SC",
        citation=(
            "Given the ESC ... then in Lambda any White bigon is an SC and "
            "any White trigon is a 41-Scharlemann cycle."
        ),
        check=_esc4,
    ),
    Rule(
        id="esc4g",
        scope=T4,
        pattern="every ESC needs a contiguous true gap",
        citation="There must be a true gap contiguous to an ESC of Lambda.",
        check=_esc4g,
    ),
    Rule(
        id="parallelwithsamelabel",
        scope=T4,
        pattern=(
            "at most one more SC on an ESC core's own pair (their edges "
            "are parallel to the core's)"
        ),
        citation=(
            "No two edges may be parallel in G_F that meet a vertex at the "
            "same label."
        ),
        check=_parallel_same_label,
    ),
    Rule(
        id="notwoescs",
        scope=T4,
        pattern="forbid two ESCs, same color, different core labels",
        citation=(
            "There cannot be two ESCs extending the same color but "
            "differently labeled SCs."
        ),
        check=_notwoescs,
    ),
    Rule(
        id="esc+fesc",
        scope=T4,
        pattern="forbid ESC + FESC with same-color, differently labeled SCs",
        citation=(
            "In Lambda there cannot be an ESC and an FESC such that the two "
            "interior SCs are the same color but have different labels."
        ),
        check=_esc_fesc,
    ),
    Rule(
        id="dbfg",
        scope=T4,
        pattern=(
            "MSgSM with an opposite-color SC: neither flanking face is a "
            "bigon"
        ),
        citation="... neither f_0 nor f_5 is a bigon.",
        check=_dbfg,
    ),
    Rule(
        id="eqspaced81",
        scope=T4,
        pattern=(
            "eight bigons with four equally spaced gaps, one a trigon, "
            "cannot occur"
        ),
        citation=(
            "Hence the gaps are equally spaced. ... g must be a "
            "meridional disk of T. From this, one can see that two of the "
            "edges of g must be parallel into the boundary of B and the "
            "third runs from one component to the other. ... But this "
            "means that either e_3 is parallel to one of e_2, e_6 or e_4 "
            "is parallel to one of e_1, e_5.[type [8,1], single trigon]"
        ),
        check=_eqspaced81,
    ),
    Rule(
        id="scBsc+BB+BB",
        scope=T4,
        pattern="forbid the configuration GSMSGSTMSGSM",
        citation=(
            "Given a collection of bigons in G_Q as shown, then the two "
            "34-SCs must be parallel such that the two 34-edges of g and "
            "h are parallel."
        ),
        check=_scbsc,
    ),
    Rule(
        id="3disjtSC",
        scope=T4_BOTH,
        pattern="forbid three SCs with disjoint label pairs",
        citation=(
            "If there are 3 SCs in G_Q with disjoint label pairs then M "
            "contains a Dyck's surface."
        ),
        check=_three_disjt_sc,
    ),
    # Situation scc
    Rule(
        id="sccnoSandS",
        scope=("t4_scc",),
        pattern="forbid two SCs of the same color with different labels",
        citation=(
            "There cannot be two SCs of the same color but with different "
            "labels."
        ),
        check=_scc_no_s_and_s,
    ),
    Rule(
        id="sccnoBBB",
        scope=("t4_scc",),
        pattern="forbid BBB",
        citation="There cannot be three consecutive bigons in Lambda.",
        check=_scc_no_bbb,
    ),
    Rule(
        id="sccnofesc",
        scope=("t4_scc",),
        pattern=(
            "with an FESC, every bigon of its SC's color is an SC on the "
            "same pair"
        ),
        citation=(
            "Assume Lambda contains an FESC and let h be its SC. Then any "
            "bigon in Lambda of the same color as h (Black or White) is a "
            "SC on the same label pair."
        ),
        check=_scc_no_fesc,
    ),
    # non-orientable, t = 6
    Rule(
        id="BWB",
        scope=("nonor_t6",),
        pattern=(
            "no four consecutive bigons; a triple is Black-White-Black "
            "with a Black (outer) SC"
        ),
        citation=(
            "If t = 6, then three consecutive bigons in Lambda must be "
            "Black-White-Black with a Black SC. In particular, there may "
            "be at most 4 mutually parallel edges on Lambda."
        ),
        check=_bwb,
    ),
    Rule(
        id="blackbigons",
        scope=("nonor_t6",),
        pattern="every Black corner belongs to a bigon",
        citation=(
            "Each Black face of G_Q is a bigon and corresponds to an edge "
            "of G_Q^S."
        ),
        check=_nonor_black_bigons,
    ),
    Rule(
        id="nowhiteSC",
        scope=("nonor_t6",),
        pattern="no White SC",
        citation=(
            "No Scharlemann cycle of G_Q bounds a White face."
        ),
        check=_no_white_sc,
    ),
    Rule(
        id="nonorforkedextS2",
        scope=("nonor_t6",),
        pattern="a trigon between two bigon triples is flanked by two SCs",
        citation=(
            "If t=6, there cannot be a forked (once) extended Scharlemann "
            "cycle."
        ),
        check=_nonor_trigon_2sc,
    ),
    Rule(
        id="singletonSC",
        scope=("nonor_t6",),
        pattern="a singleton bigon between trigons is an SC",
        citation=(
            "It must be a 12-SC, otherwise one of the trigons on either "
            "side is a White SC, contradicting Lemma nowhiteSC."
        ),
        check=_nonor_singleton_sc,
    ),
    Rule(
        id="justone12",
        scope=("nonor_t6",),
        pattern=(
            "three SCs on one Black pair with a Black bigon mixing the "
            "other two Black pairs force a parallelism"
        ),
        citation=(
            "If t=6 and Lambda contains a Black 34,56-bigon, then there is "
            "only one parallelism class of Black 12-SC."
        ),
        check=_justone12,
    ),
    # t = 6, Case D
    Rule(
        id="caseDno2esc",
        scope=("t6_caseD",),
        pattern="no SC with two or more bigons on both sides (no 2-ESC)",
        citation="Lambda contains no 2-ESC.",
        check=_cased_no_2esc,
    ),
    Rule(
        id="singlenonSCWbigon",
        scope=("t6_caseD",),
        pattern="a White non-SC bigon must be a 45,61-bigon",
        citation=(
            "The only type of White bigon in Lambda that is not an SC is "
            "a 45,61-bigon."
        ),
        check=_cased_white_bigons,
    ),
    Rule(
        id="no12SCno34SC",
        scope=("t6_caseD",),
        pattern="no 12-SC and no 34-SC",
        citation="Lambda does not contain a 12- or a 34-SC.",
        check=_cased_no_12_34_sc,
    ),
    Rule(
        id="23cornersatavtx",
        scope=("t6_caseD",),
        pattern="at most two 23-corners at the vertex belong to bigons",
        citation=(
            "At most two 23-corners at a vertex belong to bigons of Lambda."
        ),
        check=_cased_23_corners,
    ),
    Rule(
        id="nothree4561",
        scope=("t6_caseD",),
        pattern="the 45,56,61-corners of a period cannot all be bigons",
        citation=(
            "There cannot be three consecutive bigons around a vertex with "
            "a 4561-corner."
        ),
        check=_cased_nothree4561,
    ),
    Rule(
        id="trigonswitha23corner",
        scope=("t6_caseD",),
        pattern="no trigon at a 23-corner",
        citation="No trigon in Lambda has a 23-corner.",
        check=_cased_trigon23,
    ),
    Rule(
        id="sequencesofbigons",
        scope=("t6_caseD",),
        pattern=(
            "two 23-corner bigons force a non-bigon adjacent to the third "
            "23-corner"
        ),
        citation=(
            "If there are two 23-corners at a vertex x that belong to "
            "bigons of Lambda, then at the other 23-corner of x one of the "
            "adjacent corners does not belong to a bigon of Lambda."
        ),
        check=_cased_seq_of_bigons,
    ),
    Rule(
        id="caseDbanding",
        scope=("t6_caseD",),
        pattern=(
            "two full 1234-corner sequences plus a bigon at a 12- or "
            "34-corner of the third force a non-separating banded disk"
        ),
        citation=(
            "Banding f, f' together along the parallelism of the 23-edges "
            "in G_F ... gives a Black disk D' whose boundary ... must be "
            "separating in F-hat ... hence, it cannot be separating.[Case D]"
        ),
        check=_cased_endgame,
    ),
)


def rules_for(context_name: str) -> tuple[Rule, ...]:
    return tuple(r for r in RULES if context_name in r.scope)


def rule_by_id(rule_id: str) -> Rule:
    for r in RULES:
        if r.id == rule_id:
            return r
    raise KeyError(rule_id)


def rule_table() -> list[dict]:
    return [r.to_dict() for r in RULES]
