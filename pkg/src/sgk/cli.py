"""Command-line front end.

Exit codes: 0 check passed / verdict produced, 1 validation failure or
non-closing replay, 2 input could not be read or parsed.  Every command
builds a JSON report first; text output is rendered from that report, so
the two formats can never disagree.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from sgk.fatgraph import (
    FatGraph,
    GraphError,
    check_no_parallel_same_label,
    check_parity_rule,
    validate_labels,
)

EX_OK = 0
EX_FAIL = 1
EX_USAGE = 2


def _load_doc(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, ValueError) as exc:
        raise SystemExit(_diag(f"{path}: {exc}"))


def _load_graph(path: str) -> FatGraph:
    """A file holds either a bare graph or a bundle; bundles contribute
    their near side."""
    doc = _load_doc(path)
    try:
        return FatGraph.from_dict(doc.get("near", doc))
    except GraphError as exc:
        raise SystemExit(_diag(f"{path}: {exc}"))


def _load_bundle(path: str) -> Optional[tuple[FatGraph, dict[int, int]]]:
    """The far side and correspondence of a bundle file, if present."""
    doc = _load_doc(path)
    if "far" not in doc:
        return None
    try:
        far = FatGraph.from_dict(doc["far"])
        corr = {int(k): int(v) for k, v in doc.get("corr", {}).items()}
    except (GraphError, ValueError, AttributeError) as exc:
        raise SystemExit(_diag(f"{path}: {exc}"))
    return far, corr


def _diag(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EX_USAGE


def _emit(report: dict, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(text)


# -- validate ---------------------------------------------------------------


def cmd_validate(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    report = validate_labels(g).to_dict()
    checks = {"labels": report}
    pair: Optional[tuple[FatGraph, dict[int, int]]] = None
    if args.far is not None:
        gf = _load_graph(args.far)
        try:
            with open(args.corr, "r", encoding="utf-8") as fh:
                corr = {int(k): int(v) for k, v in json.load(fh).items()}
        except (OSError, ValueError, AttributeError) as exc:
            raise SystemExit(_diag(f"{args.corr}: {exc}"))
        pair = (gf, corr)
        extra = True
    else:
        pair = _load_bundle(args.graph)
        extra = False
    if pair is not None:
        gf, corr = pair
        checks["far_labels"] = validate_labels(gf).to_dict()
        checks["parity"] = check_parity_rule(g, gf, corr).to_dict()
        if extra:
            checks["parallel_labels"] = check_no_parallel_same_label(gf).to_dict()
    ok = all(c["ok"] for c in checks.values())
    out = {"ok": ok, "checks": checks}
    lines = []
    for name, c in checks.items():
        lines.append(f"{name}: {'pass' if c['ok'] else 'FAIL'}")
        for v in c["violations"]:
            where = ", ".join(
                f"{k}={v[k]}" for k in ("vertex", "position", "edge") if k in v
            )
            lines.append(f"  {v['kind']} ({where}): {v['message']}")
    _emit(out, args.json, "\n".join(lines))
    return EX_OK if ok else EX_FAIL


# -- faces ------------------------------------------------------------------


def cmd_faces(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    faces = g.trace_faces()
    out = {
        "genus": g.ambient.genus,
        "face_count": len(faces),
        "census": {str(k): v for k, v in sorted(g.face_census().items())},
        "faces": [
            {"id": f.id, "size": f.size, "boundary": [list(d) for d in f.boundary]}
            for f in faces
        ],
    }
    lines = [
        f"genus {out['genus']}, {out['face_count']} faces",
        "census: "
        + ", ".join(f"{n} of size {s}" for s, n in sorted(g.face_census().items())),
    ]
    _emit(out, args.json, "\n".join(lines))
    return EX_OK


# -- cycles -----------------------------------------------------------------


def cmd_cycles(args: argparse.Namespace) -> int:
    from sgk.cycles import find_escs, find_fescs, find_scharlemann_cycles

    g = _load_graph(args.graph)
    out = {
        "scharlemann_cycles": [s.to_dict() for s in find_scharlemann_cycles(g)],
        "escs": [r.to_dict() for r in find_escs(g)],
        "fescs": [r.to_dict() for r in find_fescs(g)],
    }
    lines = []
    for s in out["scharlemann_cycles"]:
        a, b = s["label_pair"]
        lines.append(
            f"SC face {s['face']}: length {s['length']}, labels {a}{b}, "
            f"{s['color']}"
        )
    for r in out["escs"]:
        lines.append(
            f"{r['order']}-ESC on corner {''.join(map(str, r['corner']))}, "
            f"core {r['core_labels'][0]}{r['core_labels'][1]}"
            + ("" if r["proper"] else ", improper")
        )
    for r in out["fescs"]:
        lines.append(
            f"FESC: {r['esc_order']}-ESC part, extra bigon {r['extra_bigon']}, "
            f"trigon {r['trigon']}, center face {r['center_face']}"
        )
    if not lines:
        lines = ["no Scharlemann cycles"]
    _emit(out, args.json, "\n".join(lines))
    return EX_OK


# -- web --------------------------------------------------------------------


def cmd_web(args: argparse.Namespace) -> int:
    from sgk.webs import check_bigon_abundance, find_great_web

    g = _load_graph(args.graph)
    w = find_great_web(g, g=args.genus)
    if w is None:
        _emit({"found": False}, args.json, "no great web")
        return EX_FAIL
    cert = w.certificate()
    abundance = check_bigon_abundance(w)
    out = {
        "found": True,
        "certificate": cert,
        "bigon_abundance": {"ok": abundance.ok, "detail": abundance.detail},
    }
    if abundance.ok:
        ab_line = f"bigon abundance: pass {abundance.detail}"
    elif "inapplicable" in abundance.detail:
        ab_line = f"bigon abundance: skipped ({abundance.detail['inapplicable']})"
    else:
        ab_line = f"bigon abundance: FAIL {abundance.detail}"
    lines = [
        f"great {args.genus}-web on vertices {cert['vertices']}, "
        f"{len(cert['edges'])} edges, {len(cert['ghosts'])} ghosts",
        f"disk faces: {cert['disk_faces']}",
        ab_line,
    ]
    _emit(out, args.json, "\n".join(lines))
    return EX_OK


# -- special ----------------------------------------------------------------


def cmd_special(args: argparse.Namespace) -> int:
    from sgk.specialvertex import verify_type_lemma

    try:
        res = verify_type_lemma(args.N, args.delta, args.t)
    except ValueError as exc:
        raise SystemExit(_diag(str(exc)))
    out = {"ok": res.ok, "detail": res.detail}
    if res.ok:
        text = (
            f"pass: every special vector at N={args.N}, delta={args.delta}, "
            f"t={args.t} has a listed type; realized {res.detail['types']} "
            f"({res.detail['checked']} vectors checked)"
        )
    else:
        text = f"FAIL: counterexample {res.detail['counterexample']}"
    _emit(out, args.json, text)
    return EX_OK if res.ok else EX_FAIL


# -- casework ---------------------------------------------------------------


def cmd_casework(args: argparse.Namespace) -> int:
    from sgk.caserules import rule_table
    from sgk.replay import CATALOG, emit_table, replay, verify_trace

    if args.action == "rules":
        table = rule_table()
        lines = [
            f"{r['id']} [{'/'.join(r['scope'])}] {r['pattern']}\n"
            f"    {r['citation']}"
            for r in table
        ]
        _emit({"rules": table}, args.json, "\n".join(lines))
        return EX_OK
    if args.theorem not in CATALOG:
        raise SystemExit(
            _diag(f"unknown theorem {args.theorem!r}; have {sorted(CATALOG)}")
        )
    trace = replay(args.theorem)
    sound = verify_trace(trace)
    out = {
        "theorem": trace.theorem,
        "context": trace.context,
        "closed": trace.closed,
        "sound": sound,
        "elapsed": round(trace.elapsed, 3),
        "tables": [
            {
                "type": list(tab.vtype),
                "closed_branches": len(tab.closed),
                "survivors": [s.to_dict() for s in tab.survivors],
            }
            for tab in trace.tables
        ],
    }
    if args.emit_table or not args.json:
        text = emit_table(trace)
    else:
        text = ""
    _emit(out, args.json, text)
    if args.json and args.emit_table:
        print(emit_table(trace), file=sys.stderr)
    return EX_OK if trace.closed and sound else EX_FAIL


# -- sfs --------------------------------------------------------------------


def cmd_sfs(args: argparse.Namespace) -> int:
    from sgk.sfs import SfsDescriptor, classify_dyck, enumerate_horizontal_solutions

    if args.action == "classify":
        try:
            desc = SfsDescriptor.parse(args.slopes)
            verdict = classify_dyck(desc)
        except ValueError as exc:
            raise SystemExit(_diag(str(exc)))
        out = {"slopes": [list(s) for s in desc.slopes], **verdict.to_dict()}
        if verdict.excluded:
            text = "Excluded: no incompressible Dyck's surface"
        else:
            text = "Candidate: " + ", ".join(verdict.clauses)
        _emit(out, args.json, text)
        return EX_OK
    sols = enumerate_horizontal_solutions(args.pmax, args.lmax)
    out = {"solutions": [s.to_dict() for s in sols]}
    lines = [
        f"r={s.r} p1={s.p1} p2={s.p2} lambda={s.lam}" for s in sols
    ] or ["no solutions in range"]
    _emit(out, args.json, "\n".join(lines))
    return EX_OK


# -- parser -----------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sgk", description="verification toolkit for labeled intersection graphs"
    )
    ap.add_argument("--json", action="store_true", help="emit the JSON report")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="label and parity validation")
    p.add_argument("graph")
    p.add_argument("--far", help="partner-side graph for the parity check")
    p.add_argument("--corr", help="JSON edge correspondence {near: far}")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("faces", help="trace faces, census, genus")
    p.add_argument("graph")
    p.set_defaults(func=cmd_faces)

    p = sub.add_parser("cycles", help="Scharlemann cycles, ESCs, FESCs")
    p.add_argument("graph")
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("web", help="great web search")
    p.add_argument("graph")
    p.add_argument("--genus", type=int, default=2)
    p.set_defaults(func=cmd_web)

    p = sub.add_parser("special", help="exhaustive special-vertex type check")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.set_defaults(func=cmd_special)

    p = sub.add_parser("casework", help="forbidden-configuration case calculus")
    psub = p.add_subparsers(dest="action", required=True)
    pr = psub.add_parser("replay", help="re-run a cataloged case elimination")
    pr.add_argument("--theorem", required=True)
    pr.add_argument("--emit-table", action="store_true")
    pr.set_defaults(func=cmd_casework)
    pl = psub.add_parser("rules", help="print the rule table")
    pl.set_defaults(func=cmd_casework)

    p = sub.add_parser("sfs", help="Seifert fibered space classifier")
    ssub = p.add_subparsers(dest="action", required=True)
    sc = ssub.add_parser("classify")
    sc.add_argument("--slopes", required=True, help="e.g. -1/2,1/6,2/7")
    sc.set_defaults(func=cmd_sfs)
    sh = ssub.add_parser("horizontal")
    sh.add_argument("--pmax", type=int, default=12)
    sh.add_argument("--lmax", type=int, default=60)
    sh.set_defaults(func=cmd_sfs)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    argv = list(argv)
    # slope strings may start with '-'; fuse them so argparse does not
    # mistake the value for an option
    for i, a in enumerate(argv[:-1]):
        if a == "--slopes":
            argv[i : i + 2] = [f"--slopes={argv[i + 1]}"]
            break
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit:
        raise
    except GraphError as exc:
        return _diag(str(exc))


if __name__ == "__main__":
    sys.exit(main())
