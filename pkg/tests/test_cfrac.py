from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from lucasdep import cfrac
from lucasdep import intervals as iv
from lucasdep.intervals import Interval, PrecisionError

# leading partial quotients of log 3 / log 2
LOG32_HEAD = [1, 1, 1, 2, 2, 3, 1, 5, 2, 23]


def test_log3_over_log2_head():
    cf = cfrac.expand(cfrac.log3_over_log2, 10 ** 12)
    assert list(cf.partial_quotients[:10]) == LOG32_HEAD


def test_log3_over_log2_at_1e114():
    M = 10 ** 114
    cf = cfrac.expand(cfrac.log3_over_log2, M)
    N = cf.first_index_above(M)
    assert N == 229
    assert cfrac.max_quotient(cf, N) == (100, 218)
    assert cfrac.legendre_gap(cf, M) == 102


def test_convergents_bracket_value():
    cf = cfrac.expand(cfrac.golden_ratio, 10 ** 6)
    assert set(cf.partial_quotients) == {1}
    value = cf.value_enclosure
    for i, (p, q) in enumerate(cf.convergents[:-1]):
        x = Fraction(p, q)
        assert (x < value.lo) if i % 2 == 0 else (x > value.hi)


@given(st.fractions(min_value=Fraction(1, 1000), max_value=1000, max_denominator=10 ** 6))
def test_rational_point_terminates_exactly(q):
    cf = cfrac.expand(Interval.point(q), 10 ** 12)
    p, den = cf.convergents[-1]
    assert Fraction(p, den) == q


def test_wide_enclosure_raises():
    with pytest.raises(PrecisionError):
        cfrac.expand(Interval(Fraction(1), Fraction(3, 2) + Fraction(1, 3)), 10 ** 6)


def test_precision_doubles_on_demand():
    cf = cfrac.expand(cfrac.log3_over_log2, 10 ** 60, bits=8)
    assert cf.first_index_above(10 ** 60) is not None


def sqrt2(bits):
    return iv.sqrt(2, bits)


def e_const(bits):
    mpmath.mp.prec = bits + 40
    e = mpmath.e
    m, ex = mpmath.frexp(e)
    lo = Fraction(int(m * 2 ** (bits + 20)) - 2, 2 ** (bits + 20)) * Fraction(2) ** int(ex)
    return Interval(lo, lo + Fraction(4, 2 ** (bits + 20)) * Fraction(2) ** int(ex))


@pytest.mark.parametrize("source", [cfrac.log3_over_log2, cfrac.golden_ratio, sqrt2, e_const])
@pytest.mark.parametrize("M", [10, 57, 200])
def test_legendre_gap_exhaustive(source, M):
    cf = cfrac.expand(source, M)
    gap = cfrac.legendre_gap(cf, M)
    tau = source(256)
    for s in range(1, M):
        r = round(tau.mid * s)
        for rr in (r - 1, r, r + 1):
            dist = abs(tau - Fraction(rr, s))
            assert dist.lo > Fraction(1, gap * s * s)


def test_decimal_source():
    cf = cfrac.expand(cfrac.decimal_source("3.245"), 10 ** 6)
    p, q = cf.convergents[-1]
    assert Fraction(p, q) == Fraction("3.245")
