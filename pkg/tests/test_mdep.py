import math

import pytest
from hypothesis import given, strategies as st

from lucasdep import mdep
from lucasdep.sequences import lucas_term


@given(st.integers(2, 10 ** 6), st.integers(1, 12), st.integers(1, 12))
def test_powers_of_common_base_are_dependent(c, s, t):
    a, b = c ** s, c ** t
    v = mdep.mdep_test(a, b)
    assert v.dependent
    x, y = v.exponents
    assert (x, y) != (0, 0)
    # a^x b^y == 1 with y <= 0 < x
    assert a ** x == b ** (-y)


@given(st.integers(2, 10 ** 12))
def test_primitive_base(a):
    c, e = mdep.primitive_base(a)
    assert c ** e == a
    assert mdep.primitive_base(c) == (c, 1)


def test_ones():
    assert mdep.mdep_test(1, 5).exponents == (1, 0)
    assert mdep.mdep_test(7, 1).exponents == (0, 1)
    with pytest.raises(ValueError):
        mdep.mdep_test(0, 3)


def test_against_brute_force_small():
    for a in range(2, 120):
        for b in range(2, 120):
            assert bool(mdep.mdep_test(a, b)) == mdep.brute_force_dependent(a, b)


def test_desk_scale_search():
    hits = mdep.search(mdep.SearchWindow((2, 10), 40))
    assert mdep.triples(hits) == [(2, 0, 3), (3, 0, 7)]


def test_search_methods_agree():
    for k in range(2, 9):
        a = mdep.triples(mdep.search_k(k, 60, method="grouped"))
        b = mdep.triples(mdep.search_k(k, 60, method="pairwise"))
        assert a == b


def test_search_m_min():
    assert mdep.search(mdep.SearchWindow((3, 48), 50, 3)) == []
    assert mdep.triples(mdep.search(mdep.SearchWindow((2, 2), 12))) == [(2, 0, 3)]


@given(st.integers(2, 30), st.integers(3, 80), st.integers(2, 79))
def test_gcd_filter_is_necessary(k, n, m):
    if m >= n:
        return
    if mdep.mdep_test(lucas_term(k, n), lucas_term(k, m)):
        assert mdep.gcd_power_filter(k, n, m)


def test_window_validation():
    with pytest.raises(ValueError):
        mdep.SearchWindow((5, 4), 10)
    w = mdep.SearchWindow((2, 3), 5)
    assert w.indices() == [0, 2, 3, 4, 5]
    assert w.to_json()["exclusions"] == {"n": 1, "m": 1}
