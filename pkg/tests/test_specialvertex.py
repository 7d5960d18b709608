from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sgk import instances
from sgk.generators import bundle_web
from sgk.specialvertex import (
    PhiVector,
    VertexType,
    alpha,
    expected_types,
    has_type,
    is_special,
    phi,
    special_threshold,
    verify_counting_identities,
    verify_type_lemma,
    web_face_census,
)
from sgk.webs import Web


def test_alpha_small_weights():
    assert alpha(3, (4, 7)) == Fraction(2)
    assert alpha(4, (3, 3, 9)) == Fraction(4)
    assert alpha(2, (5,)) == Fraction(0)


def test_special_threshold_values():
    assert special_threshold(3, 3, 4) == Fraction(3)
    assert special_threshold(4, 3, 4) == Fraction(8)


def test_is_special_is_strict():
    at = PhiVector((6,), 3, 4)
    above = PhiVector((7,), 3, 4)
    assert not is_special(at, 3)
    assert is_special(above, 3)


def test_has_type_prefix_exact_last_at_least():
    ty = VertexType((7, 4))
    assert has_type((7, 5), ty)
    assert has_type((7, 4, 9), ty)
    assert not has_type((8, 4), ty)
    assert not has_type((7, 3), ty)
    only_last = VertexType((7,))
    assert has_type((9,), only_last)
    assert not has_type((6,), only_last)


def test_expected_types_known_weights():
    assert [t.ks for t in expected_types(3, 3, 4)] == [(7,)]
    assert [t.ks for t in expected_types(4, 3, 4)] == [(7, 4), (8, 1), (9,)]
    with pytest.raises(ValueError):
        expected_types(5, 3, 4)


def test_verify_type_lemma_base_case():
    res = verify_type_lemma(3, 3, 4)
    assert res.ok
    assert "[7]" in res.detail["types"]
    assert res.detail["checked"] > 0


def test_verify_type_lemma_rejects_small_delta():
    with pytest.raises(ValueError):
        verify_type_lemma(3, 2, 4)


@settings(max_examples=80, deadline=None)
@given(
    st.integers(2, 4),
    st.lists(st.integers(0, 3), min_size=1, max_size=4),
    st.lists(st.integers(0, 3), min_size=1, max_size=4),
)
def test_alpha_is_linear(n, a, b):
    size = max(len(a), len(b))
    a = a + [0] * (size - len(a))
    b = b + [0] * (size - len(b))
    s = [x + y for x, y in zip(a, b)]
    assert alpha(n, s) == alpha(n, a) + alpha(n, b)


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 4), st.lists(st.integers(0, 5), min_size=1, max_size=4),
       st.integers(0, 3))
def test_alpha_monotone_in_entries(n, rho, bump):
    bigger = [rho[0] + bump] + rho[1:]
    assert alpha(n, bigger) >= alpha(n, rho)


def test_phi_on_dipole_web():
    w = Web.from_host(instances.esc_dipole(4), [1, 2])
    p = phi(w, 1)
    assert p.get(2) == 3
    assert p.total == 3


def test_web_face_census_outside_size():
    w = Web.from_host(instances.esc_dipole(4), [1, 2])
    census = web_face_census(w)
    assert census["k"] == 2
    assert sum(census["Fbar"].values()) == sum(census["F"].values()) - 1


def test_counting_identities_on_bundle_web():
    w = bundle_web(3, 4, (6, 6), (0, 2))
    res = verify_counting_identities(w)
    assert res.ok, res.detail


def test_counting_identities_on_exhaustive_sample(exhaustive_webs):
    for w in exhaustive_webs[::23]:
        res = verify_counting_identities(w)
        assert res.ok, res.detail
