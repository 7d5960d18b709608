import pytest

from sgk.replay import CATALOG, emit_table, replay, thread_count, verify_trace


def test_unknown_theorem():
    with pytest.raises(KeyError):
        replay("not-a-theorem")


def test_thread_count_env(monkeypatch):
    monkeypatch.setenv("SGK_THREADS", "3")
    assert thread_count() == 3
    monkeypatch.setenv("SGK_THREADS", "garbage")
    assert thread_count() >= 1
    monkeypatch.delenv("SGK_THREADS")
    assert thread_count() >= 1


def test_catalog_types():
    assert {tuple(v) for v in CATALOG["t4_noscc"][1]} == {(9,), (8, 1), (7, 4)}
    assert {tuple(v) for v in CATALOG["nonor_t6"][1]} == {(14,), (13, 4)}


def test_all_replays_close(traces):
    for tid, trace in traces.items():
        assert trace.closed, f"{tid} left survivors"
        for table in trace.tables:
            assert not table.survivors
            assert table.closed, f"{tid} {table.vtype}: empty case table"


def test_traces_are_sound(traces):
    for tid, trace in traces.items():
        assert verify_trace(trace), tid


def test_emit_table_mentions_every_type(traces):
    trace = traces["t4_noscc"]
    text = emit_table(trace)
    for table in trace.tables:
        name = "[" + ",".join(str(v) for v in table.vtype) + "]"
        assert name in text


def test_closed_leaf_serialization(traces):
    leaf = traces["t4_scc"].tables[0].closed[0]
    d = leaf.to_dict()
    assert d["rule"] and d["citation"]
    assert "sequence" in d
