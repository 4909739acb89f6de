import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lucasdep import bounds as B


def test_guz_values():
    assert B.guz_bound(1, 101) == 933
    assert 7.6e8 < B.guz_bound(2, 10 ** 6) <= 7.7e8


@given(st.integers(1, 3), st.integers(0, 10 ** 9))
def test_guz_output_escapes_hypothesis(s, extra):
    # at z = N the hypothesis T > z / (log z)^s must already fail
    T = (4 * s * s) ** s + 1 + extra
    N = B.guz_bound(s, T)
    assert N / math.log(N) ** s >= T


def test_guz_precondition():
    with pytest.raises(ValueError):
        B.guz_bound(2, 256)


def test_matveev_constant_t3():
    c = B.matveev_constant(3, 1)
    ref = 1.4 * 30 ** 6 * 3 ** 4.5
    assert abs(float(c.mid) / ref - 1) < 1e-12


def test_matveev_input_validation():
    with pytest.raises(ValueError):
        B.MatveevInput(2, 1, 10, (1, Fraction(1, 10)))
    with pytest.raises(ValueError):
        B.MatveevInput(2, 1, 10, (1,))
    r = B.matveev_lower_bound(B.MatveevInput(1, 1, 1, (1,)))
    assert r.value == r.enclosure.lo and r.value < 0


def test_lmn_floor():
    r = B.lmn_lower_bound(B.LMNInput(1, 2, 2, 1, 1))
    # b' is tiny, so the max is the 21/D floor
    assert abs(float(r.value) + 24.34 * 21 ** 2 * 4) < 1e-6
    with pytest.raises(ValueError):
        B.LMNInput(2, Fraction(1, 4), 1, 1, 1)


@given(st.integers(3, 1000))
def test_lemma_bound_within_envelope(k):
    r = B.bound_n_of_k(k)
    assert r.details["within_envelope"]
    assert r.value == max(r.details["branch_a"], r.details["branch_b"])


def test_lemma_bound_at_1000():
    assert B.bound_n_of_k(1000).value < Fraction(93, 10) * 10 ** 63


@given(st.integers(3, 400))
def test_lemma_bound_increasing(k):
    assert B.bound_n_of_k(k).value < B.bound_n_of_k(k + 1).value


def test_k_domain():
    with pytest.raises(ValueError):
        B.bound_n_of_k(2)


@pytest.mark.parametrize("x,e", [(Fraction(1), 0), (Fraction(10), 1), (Fraction(11), 2), (Fraction(1, 100), -2)])
def test_ceil_log10(x, e):
    assert B.ceil_log10(x) == e
