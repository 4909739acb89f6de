from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lucasdep.algebraic import alpha_interval
from lucasdep.sequences import (LucasTable, SequenceParams, check_growth_bounds,
                                check_power_identity, factor_smooth, lucas_term, table_for)


def naive(k, n):
    # window L_{2-k..-1} = 0, L_0 = 2, L_1 = 1
    seq = [0] * (k - 2) + [2, 1]
    while len(seq) - (k - 2) <= n:
        seq.append(sum(seq[-k:]))
    return seq[n + k - 2]


# [DERIVED] frozen from the naive recurrence above
FROZEN = {(2, 3): 4, (2, 10): 123, (3, 7): 64, (3, 6): 35, (4, 8): 160, (10, 15): 24500, (2, 4): 7, (2, 6): 18, (3, 4): 10,
          (3, 12): 1350, (3, 15): 8400}


@pytest.mark.parametrize("key,value", sorted(FROZEN.items()))
def test_frozen_terms(key, value):
    assert lucas_term(*key) == value


@given(st.integers(2, 12), st.integers(0, 120))
def test_matches_naive(k, n):
    assert lucas_term(k, n) == naive(k, n)


@given(st.integers(2, 15), st.integers(2, 200))
def test_recurrence(k, n):
    t = table_for(SequenceParams(k))
    t.extend_to(n + 1)
    assert t[n] == sum(t[n - i] for i in range(1, k + 1))


def test_negative_indices_and_domain():
    assert [lucas_term(5, n) for n in range(-3, 2)] == [0, 0, 0, 2, 1]
    with pytest.raises(ValueError):
        lucas_term(5, -4)


@pytest.mark.parametrize("k", range(2, 40))
def test_power_identity(k):
    assert check_power_identity(k)


@given(st.integers(3, 20), st.integers(1, 150))
def test_growth_bounds(k, n):
    a = alpha_interval(k, 128)
    assert check_growth_bounds(k, n, a.lo, a.hi)


def test_cache_roundtrip(tmp_path):
    table = LucasTable(SequenceParams(4))
    table.extend_to(30)
    path = table.save(tmp_path)
    loaded = LucasTable.load(SequenceParams(4), tmp_path)
    assert loaded.terms(0, 30) == table.terms(0, 30)
    assert path.exists()


def test_factor_smooth():
    r = factor_smooth(8400, 7)
    assert r.smooth and r.factors == {2: 4, 3: 1, 5: 2, 7: 1}
    r = factor_smooth(2 * 11, 7)
    assert not r.smooth and r.cofactor == 11
