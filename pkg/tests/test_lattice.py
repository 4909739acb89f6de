import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lucasdep import lattice as L
from lucasdep.intervals import Interval


def random_basis(rng, dim, size):
    while True:
        cols = [[rng.randint(-size, size) for _ in range(dim)] for _ in range(dim)]
        if L.determinant(cols) != 0:
            return cols


def same_lattice(a, b):
    # every column of b is an integer combination of a, and the covolumes agree
    if abs(L.determinant(a)) != abs(L.determinant(b)):
        return False
    return all(all(q.denominator == 1 for q in L.solve(a, col)) for col in b)


def test_lll_200_random_bases():
    rng = random.Random(20261016)
    for i in range(200):
        dim = 3 + i % 3
        cols = random_basis(rng, dim, 10 ** rng.randint(1, 8))
        red = L.lll_reduce(cols)
        assert L.is_lll_reduced(red.gs)
        assert same_lattice(cols, red.basis.columns)


@given(st.integers(2, 4).flatmap(
    lambda d: st.lists(st.lists(st.integers(-50, 50), min_size=d, max_size=d), min_size=d, max_size=d)))
def test_lll_property(cols):
    if L.determinant(cols) == 0:
        with pytest.raises(L.DependentColumnsError):
            L.lll_reduce(cols)
        return
    red = L.lll_reduce(cols)
    assert L.is_lll_reduced(red.gs)
    assert same_lattice(cols, red.basis.columns)
    # d_i from the integral algorithm equal the Gram-Schmidt products
    norms = red.gs.norms_sq
    for j in range(len(cols)):
        assert red.bstar_norm_sq(j) == norms[j]


def shortest_norm_sq(cols):
    """Exact minimum of |v|^2 over nonzero lattice vectors.

    Any v with |v|^2 <= B has coefficients z = M^-1 v with |z_j| <= |row_j(M^-1)| sqrt(B).
    """
    dim = len(cols)
    best = min(sum(x * x for x in c) for c in cols)
    inv_rows = []
    for j in range(dim):
        e = [0] * dim
        e[j] = 1
        inv_rows.append(e)
    # columns of the inverse are solutions of M z = e_i; rows are read off
    inv_cols = [L.solve(cols, e) for e in inv_rows]
    rows = [[inv_cols[i][j] for i in range(dim)] for j in range(dim)]
    box = [math.isqrt(math.ceil(sum(x * x for x in r) * best)) + 1 for r in rows]
    for z in itertools.product(*[range(-b, b + 1) for b in box]):
        if any(z):
            v = [sum(z[j] * cols[j][i] for j in range(dim)) for i in range(dim)]
            best = min(best, sum(x * x for x in v))
    return best


def test_de_weger_delta_below_enumerated_minimum():
    rng = random.Random(7)
    for _ in range(50):
        dim = rng.choice([2, 3])
        cols = random_basis(rng, dim, 12)
        out = L.de_weger_lower_bound(L.lll_reduce(cols))
        assert out.delta_sq <= shortest_norm_sq(cols)
        assert out.c1_sq >= out.c1_min_sq


def test_de_weger_inhomogeneous():
    cols = [[1, 0], [0, 1]]
    out = L.de_weger_lower_bound(L.lll_reduce(cols), [0, 0])
    assert out.lam == 1
    # y not in the lattice: lambda is the distance of the last nonzero coordinate to Z
    out = L.de_weger_lower_bound(L.lll_reduce([[2, 0], [0, 2]]), [1, 1])
    assert out.lam == Fraction(1, 2)


def test_reduction_step_and_enlarge():
    out = L.DeWegerOutcome(Fraction(1), Fraction(1), Fraction(1), Fraction(10 ** 6), 10 ** 6)
    done = L.reduction_step(out, 10 ** 6, 1, 1, [10, 10, 10])
    S, T = L.s_and_t([10, 10, 10])
    assert (S, T) == (200, Fraction(31, 2))
    assert done.new_bound == math.floor(math.log(10 ** 6) - math.log(math.sqrt(10 ** 6 - 200) - 15.5))
    with pytest.raises(L.EnlargeC) as info:
        L.reduction_step(out, 10 ** 6, 1, 1, [1000, 1000, 1000], enlarge_factor=10)
    assert info.value.suggested_C == 10 ** 7


def test_approx_lattice_shape():
    etas = [Interval(Fraction(1, 3), Fraction(1, 3)), Interval(Fraction(1, 7), Fraction(1, 7))]
    b = L.build_approx_lattice(etas, 100)
    assert b.columns == ((1, 33), (0, 14))


def test_basis_json_roundtrip():
    b = L.LatticeBasis.from_columns([[1, 2], [3, 4]])
    assert L.LatticeBasis.from_json(b.to_json()) == b
    assert b.determinant() == -2
