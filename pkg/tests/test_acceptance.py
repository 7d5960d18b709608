"""End-to-end acceptance checks for the whole toolkit.

Each test pins one advertised guarantee, including the stated time
budgets; budgets are asserted, not just hoped for.
"""

import random
import time

import pytest

from sgk.fatgraph import FatGraph, GraphError, check_parity_rule, validate_labels
from sgk.generators import random_great_web, random_rotation_system
from sgk.replay import verify_trace
from sgk.sfs import SfsDescriptor, classify_dyck, enumerate_horizontal_solutions
from sgk.specialvertex import verify_counting_identities, verify_type_lemma
from sgk.webs import check_bigon_abundance

from conftest import bundle_graphs


def test_criterion_1_euler_identity_on_random_maps():
    rng = random.Random(99)
    t0 = time.perf_counter()
    for _ in range(1000):
        g = random_rotation_system(rng, max_v=8, max_e=24)
        census = g.face_census()
        assert sum(i * n for i, n in census.items()) == 2 * g.edge_count
        chi = g.vertex_count - g.edge_count + len(g.trace_faces())
        assert chi == 2 - 2 * g.ambient.genus
    assert time.perf_counter() - t0 < 5.0


def test_criterion_2_type_lemma_sweep():
    t0 = time.perf_counter()
    for delta in (3, 4, 5):
        for t in (4, 6, 8):
            assert verify_type_lemma(3, delta, t).ok, (3, delta, t)
        for t in (4, 6):
            assert verify_type_lemma(4, delta, t).ok, (4, delta, t)
    assert time.perf_counter() - t0 < 30.0


def test_criterion_3_counting_bound_exhaustive(exhaustive_webs):
    assert exhaustive_webs
    failures = []
    for w in exhaustive_webs:
        res = verify_counting_identities(w, weights=(2, 3, 4))
        if not res.ok:
            failures.append(res.detail)
    assert not failures, failures[:3]


def test_criterion_3_counting_bound_randomized():
    rng = random.Random(424242)
    checked = 0
    for delta, t, vmax in ((3, 4, 5), (3, 6, 4), (4, 4, 4)):
        for _ in range(10):
            w = random_great_web(rng, delta=delta, t=t, vmax=vmax)
            if w is None:
                continue
            checked += 1
            res = verify_counting_identities(w, weights=(2, 3, 4))
            assert res.ok, res.detail
    assert checked >= 10


def test_criterion_4_bigon_abundance(exhaustive_webs):
    for w in exhaustive_webs:
        res = check_bigon_abundance(w)
        assert res.ok, res.detail
    rng = random.Random(5150)
    for _ in range(15):
        w = random_great_web(rng, delta=3, t=4, vmax=5)
        if w is not None:
            assert check_bigon_abundance(w).ok


def test_criterion_5_horizontal_solution_families():
    sols = enumerate_horizontal_solutions(12, 60)
    families = {(s.p1, s.p2) for s in sols}
    assert families == {(2, 2), (2, 3), (2, 4), (3, 3)}
    # three of the families are rigid, one moves with the covering degree
    rigid = {(s.p1, s.p2, s.lam) for s in sols if (s.p1, s.p2) != (2, 2)}
    assert rigid == {(2, 3, 6), (2, 4, 4), (3, 3, 3)}
    assert all(s.r == -1 for s in sols if (s.p1, s.p2) == (2, 2))


SFS_GOLDEN = [
    ("-1/2,1/6,2/7", True, ()),
    ("2/3,2/5,2/7", False, ("A",)),
    ("-2/3,2/5,-2/7", False, ("A",)),
    ("1/2,1/4,1/5", False, ("B",)),
    ("1/2,3/4,1/7", False, ("B",)),
    ("1/2,1/3,1/7", False, ("C",)),
    ("1/2,1/2,1/9", False, ("D",)),
    ("1/3,2/3,1/5", False, ("E",)),
    ("1/2,1/3,1/4", False, ("B", "C")),
    ("1/2,1/2,1/3", False, ("C", "D")),
    ("1/3,1/3,1/2", False, ("C", "E")),
    ("2/3,2/3,2/5", False, ("A", "E")),
    ("1/5,1/6,1/7", True, ()),
    ("-1/4,1/5,3/7", True, ()),
    ("1/2,1/5,1/7", True, ()),
    ("1/3,1/5,1/5", True, ()),
    ("1/2,1/2,1/4", False, ("B", "D")),
    ("2/5,2/7,2/9", False, ("A",)),
    ("1/2,1/8,1/9", False, ("B",)),
    ("1/3,1/3,1/3", False, ("E",)),
]


def test_criterion_6_sfs_verdicts():
    assert len(SFS_GOLDEN) == 20
    for text, excluded, clauses in SFS_GOLDEN:
        v = classify_dyck(SfsDescriptor.parse(text))
        assert v.excluded == excluded, text
        assert v.clauses == clauses, text


def test_criterion_7_replays_close_in_budget(traces):
    assert set(traces) == {"t4_noscc", "t4_scc", "nonor_t6", "t6_caseD"}
    for tid, trace in traces.items():
        assert trace.closed, tid
    assert sum(t.elapsed for t in traces.values()) < 120.0


def test_criterion_8_trace_soundness(traces):
    for tid, trace in traces.items():
        assert verify_trace(trace), tid


def test_criterion_9_golden_corpus(valid_bundles, mutant_bundles):
    assert len(valid_bundles) == 50
    names = {d["name"] for d in valid_bundles}
    for required in ("fig_fesc", "fig_tauoflength4", "fig_tauoflength6",
                     "fig_forkedextS2", "fig_dbfgconfig"):
        assert required in names
    for doc in valid_bundles:
        near, far, corr = bundle_graphs(doc)
        assert validate_labels(near).ok, doc["name"]
        assert validate_labels(far).ok, doc["name"]
        assert check_parity_rule(near, far, corr).ok, doc["name"]

    assert len(mutant_bundles) == 10
    for doc in mutant_bundles:
        exp = doc["expected"]
        if exp["check"] == "structure":
            with pytest.raises(GraphError) as err:
                FatGraph.from_dict(doc[exp["side"]])
            assert f"vertex {exp['vertex']} position {exp['position']}" in str(
                err.value
            )
            continue
        near = FatGraph.from_dict(doc["near"])
        far = FatGraph.from_dict(doc["far"])
        if exp["check"] == "labels":
            g = near if exp["side"] == "near" else far
            first = validate_labels(g).first
            assert first is not None, doc["name"]
            assert first.vertex == exp["vertex"], doc["name"]
            assert first.position == exp["position"], doc["name"]
        else:
            corr = {int(k): v for k, v in doc["corr"].items()}
            first = check_parity_rule(near, far, corr).first
            assert first is not None, doc["name"]
            assert first.edge == exp["edge"], doc["name"]
            assert first.kind == exp["kind"], doc["name"]
