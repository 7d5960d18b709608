import pytest

from sgk.caserules import CONTEXTS, rule_by_id, rule_table, rules_for
from sgk.casework import CornerSequence, admissible


def ctx():
    return CONTEXTS["t4_noscc"]


def test_rule_table_shape():
    table = rule_table()
    assert len(table) == 42
    ids = [row["id"] for row in table]
    assert len(set(ids)) == len(ids)
    for row in table:
        assert row["citation"].strip()
        assert row["scope"]


def test_rules_for_every_context():
    for name in CONTEXTS:
        rules = rules_for(name)
        assert rules
        for r in rules:
            assert rule_by_id(r.id) is r


def test_rule_by_id_unknown():
    with pytest.raises(KeyError):
        rule_by_id("no-such-rule")


def test_corner_sequence_validates_word():
    c = ctx()
    with pytest.raises(ValueError):
        CornerSequence(c, "G" * (c.n - 1))
    with pytest.raises(ValueError):
        CornerSequence(c, "Z" * c.n)


def test_corner_sequence_geometry():
    c = ctx()
    seq = CornerSequence(c, "G" * c.n)
    for p in range(c.n):
        lo, hi = seq.pair(p)
        assert hi == lo % c.t + 1
        assert 1 <= lo <= c.t
    # positions one period apart sit on the same label pair
    assert seq.pair(0) == seq.pair(c.t)


def test_all_gap_word_is_admissible():
    c = ctx()
    seq = CornerSequence(c, "G" * c.n)
    rules = [r for r in rules_for(c.name) if r.applicable(seq, frozenset())]
    verdict = admissible(seq, rules)
    # gap-only words carry no bigons, so bigon-pattern rules cannot fire
    assert verdict.ok or verdict.violated


def test_admissibility_reports_skipped_rules():
    c = ctx()
    seq = CornerSequence(c, "G" * c.n)
    verdict = admissible(seq, rules_for(c.name))
    assert set(verdict.skipped).isdisjoint({verdict.violated})
