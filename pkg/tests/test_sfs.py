import pytest
from hypothesis import given, settings, strategies as st

from sgk.sfs import (
    SfsDescriptor,
    classify_dyck,
    crosscap_is_two,
    enumerate_horizontal_solutions,
)


def test_parse_and_orders():
    m = SfsDescriptor.parse("-1/2, 1/6, 2/7")
    assert m.slopes == ((-1, 2), (1, 6), (2, 7))
    assert m.orders == (2, 6, 7)


def test_parse_rejects_unreduced():
    with pytest.raises(ValueError):
        SfsDescriptor.parse("2/4,1/3,1/5")


def test_crosscap_known_values():
    assert crosscap_is_two(2, 1).verdict == "two"
    assert crosscap_is_two(3, 1).verdict == "not-two"
    assert crosscap_is_two(1, 1).verdict == "mobius"


def test_crosscap_rejects_imprimitive():
    with pytest.raises(ValueError):
        crosscap_is_two(3, 3)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 40), st.integers(0, 200))
def test_crosscap_periodic_in_l(k, l):
    from math import gcd
    if gcd(2 * k, l % (2 * k)) != 1:
        return
    assert crosscap_is_two(k, l).verdict == crosscap_is_two(k, l + 2 * k).verdict
    assert crosscap_is_two(k, l).verdict == crosscap_is_two(k, -l).verdict


def test_horizontal_solutions_satisfy_equation():
    for s in enumerate_horizontal_solutions(12, 60):
        assert -s.lam + s.lam // s.p1 + s.lam // s.p2 + s.r == -1
        assert s.r <= 0


def test_horizontal_solutions_monotone_in_bounds():
    small = set(enumerate_horizontal_solutions(6, 24))
    large = set(enumerate_horizontal_solutions(12, 60))
    assert small <= large


def test_classify_dyck_clauses():
    cases = {
        "2/3,2/5,2/7": ("A",),
        "1/2,1/4,1/5": ("B",),
        "1/2,1/3,1/7": ("C",),
        "1/2,1/2,1/9": ("D",),
        "1/3,2/3,1/5": ("E",),
        "1/2,1/3,1/4": ("B", "C"),
        "-1/2,1/6,2/7": (),
    }
    for text, clauses in cases.items():
        v = classify_dyck(SfsDescriptor.parse(text))
        assert v.clauses == clauses, text
        assert v.excluded == (not clauses)


def test_classify_needs_three_exceptional_fibers():
    with pytest.raises(ValueError):
        classify_dyck(SfsDescriptor.parse("1/1,1/2,1/3"))
