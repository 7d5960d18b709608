#!/usr/bin/env python3
"""Regenerate the golden graph corpus under tests/golden/.

Each golden file is a bundle {"name", "near", "far", "corr"} holding a
labeled graph pair with its edge correspondence.  Files carrying an
"expected" block are deliberately corrupted variants; the block records
which check must fail first and where.
"""

from __future__ import annotations

import copy
import json
import pathlib
import random
import sys

from sgk import instances
from sgk.cycles import find_fescs, find_scharlemann_cycles
from sgk.fatgraph import (
    FatGraph,
    GraphError,
    check_parity_rule,
    validate_labels,
)
from sgk.generators import derive_far_graph, random_rotation_system

OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"


def bundle(name: str, near: FatGraph) -> dict:
    derived = derive_far_graph(near)
    if derived is None:
        raise RuntimeError(f"{name}: no partner graph exists")
    far, corr = derived
    doc = {
        "name": name,
        "near": near.to_dict(),
        "far": far.to_dict(),
        "corr": {str(k): v for k, v in corr.items()},
    }
    check(doc)
    return doc


def check(doc: dict) -> None:
    near = FatGraph.from_dict(doc["near"])
    far = FatGraph.from_dict(doc["far"])
    corr = {int(k): v for k, v in doc["corr"].items()}
    for side, g in (("near", near), ("far", far)):
        rep = validate_labels(g)
        if not rep.ok:
            raise RuntimeError(f"{doc['name']}: {side} labels: {rep.first}")
    rep = check_parity_rule(near, far, corr)
    if not rep.ok:
        raise RuntimeError(f"{doc['name']}: parity: {rep.first}")


def figures() -> list[dict]:
    docs = []
    tau4 = instances.esc_dipole(4)
    assert find_scharlemann_cycles(tau4)
    docs.append(bundle("fig_tauoflength4", tau4))

    tau6 = instances.esc_dipole(6)
    docs.append(bundle("fig_tauoflength6", tau6))

    fesc = instances.fesc_instance(0)
    assert find_fescs(fesc), "fesc instance lost its FESC"
    docs.append(bundle("fig_fesc", fesc))

    docs.append(bundle("fig_forkedextS2", instances.fesc_instance(1)))

    dbfg = instances.double_sc_dipole()
    assert len(find_scharlemann_cycles(dbfg)) >= 2
    docs.append(bundle("fig_dbfgconfig", dbfg))
    return docs


def generated(n: int) -> list[dict]:
    docs = []
    for t in (2, 4, 6, 8, 10):
        docs.append(bundle(f"dipole_t{t}", instances.esc_dipole(t)))
    rng = random.Random(20260826)
    idx = 0
    while len(docs) < n:
        g = random_rotation_system(rng, max_v=6, max_e=18)
        if derive_far_graph(g) is None:
            continue
        idx += 1
        docs.append(bundle(f"rand_{idx:03d}", g))
    return docs


def mutate(doc: dict, name: str, kind: str) -> dict:
    bad = copy.deepcopy(doc)
    bad["name"] = name
    if kind == "label_swap":
        v = bad["near"]["vertices"][0]
        rot = v["rotation"]
        rot[0]["label"], rot[1]["label"] = rot[1]["label"], rot[0]["label"]
        bad["expected"] = {"check": "labels", "side": "near",
                          "vertex": v["id"], "position": 0}
    elif kind == "label_range":
        # rejected while building the graph, before any validator runs
        v = bad["far"]["vertices"][0]
        pos = len(v["rotation"]) - 1
        v["rotation"][pos]["label"] = bad["far"]["partner_labels"] + 1
        bad["expected"] = {"check": "structure", "side": "far",
                          "vertex": v["id"], "position": pos}
    elif kind == "sign_flip":
        v = bad["far"]["vertices"][0]
        v["sign"] = "-" if v["sign"] == "+" else "+"
        v["rotation"] = v["rotation"][::-1]
        # ends move position; let the loader resolve them from rotations
        bad["far"].pop("edges", None)
        eq = min(
            int(e) for e, ef in bad["corr"].items()
            if _far_incident(doc["far"], ef, v["id"])
        )
        bad["expected"] = {"check": "parity", "kind": "parity", "edge": eq}
    elif kind == "corr_break":
        a, b = sorted(bad["corr"], key=int)[:2]
        bad["corr"][a], bad["corr"][b] = bad["corr"][b], bad["corr"][a]
        bad["expected"] = {"check": "parity", "kind": "correspondence",
                          "edge": min(int(a), int(b))}
    else:
        raise ValueError(kind)
    verify_mutant(bad)
    return bad


def _far_incident(far_doc: dict, eid: int, vid: int) -> bool:
    for ed in far_doc["edges"]:
        if ed["id"] == eid:
            return vid in (ed["ends"][0][0], ed["ends"][1][0])
    raise KeyError(eid)


def verify_mutant(bad: dict) -> None:
    """A mutant that slips past its check is a bug in this script."""
    name, exp = bad["name"], bad["expected"]
    if exp["check"] == "structure":
        try:
            FatGraph.from_dict(bad[exp["side"]])
        except GraphError as err:
            want = f"vertex {exp['vertex']} position {exp['position']}"
            assert want in str(err), f"{name}: {err} lacks {want}"
            return
        raise AssertionError(f"{name}: graph built despite bad label")
    near = FatGraph.from_dict(bad["near"])
    far = FatGraph.from_dict(bad["far"])
    if exp["check"] == "labels":
        g = near if exp["side"] == "near" else far
        first = validate_labels(g).first
        assert first is not None, f"{name}: labels still valid"
        assert (first.vertex, first.position) == (exp["vertex"], exp["position"]), \
            f"{name}: first violation {first} != {exp}"
    else:
        assert validate_labels(near).ok and validate_labels(far).ok, \
            f"{name}: labels broke, wanted a parity mutant"
        corr = {int(k): v for k, v in bad["corr"].items()}
        first = check_parity_rule(near, far, corr).first
        assert first is not None, f"{name}: parity still holds"
        assert first.edge == exp["edge"] and first.kind == exp["kind"], \
            f"{name}: first violation {first} != {exp}"


def main() -> int:
    OUT.mkdir(parents=True, exist_ok=True)
    docs = figures()
    docs += generated(45)
    assert len(docs) == 50

    mutant_plan = [
        ("fig_tauoflength4", "label_swap"),
        ("fig_fesc", "label_swap"),
        ("fig_dbfgconfig", "label_swap"),
        ("dipole_t6", "label_swap"),
        ("fig_tauoflength6", "label_range"),
        ("dipole_t8", "label_range"),
        ("fig_forkedextS2", "sign_flip"),
        ("dipole_t4", "sign_flip"),
        ("dipole_t10", "sign_flip"),
        ("fig_tauoflength4", "corr_break"),
    ]
    by_name = {d["name"]: d for d in docs}
    for i, (src, kind) in enumerate(mutant_plan, 1):
        docs.append(mutate(by_name[src], f"mutant_{i:02d}_{kind}", kind))

    for stale in OUT.glob("*.json"):
        stale.unlink()
    for doc in docs:
        (OUT / f"{doc['name']}.json").write_text(json.dumps(doc, indent=1) + "\n")
    print(f"wrote {len(docs)} files to {OUT}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
