"""One test per acceptance criterion; each records a PASS/FAIL line for the summary.

Run with ``pytest tests/test_acceptance.py -v``.  Criterion 13 (all k up to
1000) is a documented command, not a test.
"""

import itertools
import math
import random
import time
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_LINES
from lucasdep import algebraic as A
from lucasdep import bounds as B
from lucasdep import cfrac, lattice, mdep, pipeline
from lucasdep.sequences import check_growth_bounds, check_power_identity


def record(number, ok, detail, seconds):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({seconds:.1f}s) {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


class Clock:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start

    @property
    def elapsed(self):
        return time.perf_counter() - self.start


def test_criterion_01_desk_scale_theorem():
    with Clock() as c:
        hits = mdep.triples(mdep.search(mdep.SearchWindow((2, 10), 40, 0)))
    ok = hits == [(2, 0, 3), (3, 0, 7)] and c.seconds < 60
    assert record(1, ok, f"triples={hits}", c.seconds)


def test_criterion_02_power_identity():
    with Clock() as c:
        ok = all(check_power_identity(k) for k in range(2, 61))
    ok = ok and c.seconds < 5
    assert record(2, ok, "L_n = 3*2^(n-2), 2<=n<=k<=60", c.seconds)


def test_criterion_03_binet_error():
    with Clock() as c:
        worst = Fraction(0)
        ok = True
        for k in range(3, 31):
            for e in A.binet_errors(k, 301, 512):
                ok &= e.certified
                worst = max(worst, e.error_enclosure.abs_upper())
    ok = ok and worst < Fraction(3, 2) and c.seconds < 120
    assert record(3, ok, f"max |e| <= {float(worst):.6f}, 512 bits", c.seconds)


def test_criterion_04_growth_and_root_interval():
    with Clock() as c:
        ok = True
        for k in range(2, 31):
            a = A.alpha_interval(k, 160)
            ok &= a.inside(2 * (1 - Fraction(1, 2 ** k)), 2)
            ok &= all(check_growth_bounds(k, n, a.lo, a.hi) for n in range(1, 301))
    ok = ok and c.seconds < 60
    assert record(4, ok, "k<=30, n<=300", c.seconds)


def test_criterion_05_norms():
    with Clock() as c:
        ok = True
        for k in range(2, 41):
            ok &= abs(A.norm_of_linear(2, -1, k)) == 2 ** (k + 1) - 3
            ok &= abs(A.norm_of_fk(k)) == Fraction((k - 1) ** 2, 2 ** (k + 1) * k ** k - (k + 1) ** (k + 1))
            if k >= 3:
                ok &= abs(A.norm_of_product(k)) < 1
    ok = ok and c.seconds < 30
    assert record(5, ok, "exact for k in [2,40]", c.seconds)


def test_criterion_06_ggl_equality():
    with Clock() as c:
        found = A.verify_ggl(200)
    ok = found == [2] and c.seconds < 5
    assert record(6, ok, f"equality set {found}", c.seconds)


def test_criterion_07_continued_fraction():
    with Clock() as c:
        M = 10 ** 114
        cf = cfrac.expand(cfrac.log3_over_log2, M)
        N = cf.first_index_above(M)
        qmax = cfrac.max_quotient(cf, 229)
    ok = N == 229 and cf.convergents[229][1] > M and qmax == (100, 218) and c.seconds < 30
    assert record(7, ok, f"N={N}, max quotient {qmax[0]} at {qmax[1]}", c.seconds)


def test_criterion_08_guz():
    with Clock() as c:
        a, b = B.guz_bound(1, 101), B.guz_bound(2, 10 ** 6)
    ok = 932 < a <= 933 and 7.6e8 < b <= 7.7e8 and c.seconds < 1
    assert record(8, ok, f"(1,101)->{a}, (2,1e6)->{b}", c.seconds)


def test_criterion_09_lemma_bound():
    with Clock() as c:
        ok = all(B.bound_n_of_k(k).value <= B.lemma_envelope(k) for k in range(3, 1001))
        at_1000 = B.bound_n_of_k(1000).value
    ok = ok and at_1000 < Fraction(93, 10) * 10 ** 63 and c.seconds < 5
    assert record(9, ok, f"n(1000) = {float(at_1000):.3e}", c.seconds)


@pytest.fixture(scope="module")
def reductions():
    out, start = {}, time.perf_counter()
    for k in (3, 10, 100):
        out[k] = pipeline.reduce_small_k(k)
    return out, time.perf_counter() - start


def test_criterion_10a_first_pass_m_bound(reductions):
    runs, seconds = reductions
    details, ok = [], seconds < 600
    for k, r in runs.items():
        first = r.passes[0]
        assert first.branch == "a" and first.index == 1 and first.C == 6 * 10 ** 194
        holds = first.delta_sq >= first.T ** 2 + first.S and not first.enlargements
        ok &= holds and first.bound <= 935
        details.append(f"k={k}: m<={first.bound}")
    assert record("10a", ok, "; ".join(details) + " (target <= 935, delta^2 >= T^2+S)", seconds)


def test_criterion_10b_branch_b_first_pass(reductions):
    runs, seconds = reductions
    details, ok = [], seconds < 600
    for k, r in runs.items():
        rec = next(p for p in r.passes if p.branch == "b" and p.index == 1)
        assert rec.C == 10 ** 512
        n = 2 * rec.bound + 1
        ok &= n <= 4356
        details.append(f"k={k}: n/2<={rec.bound}, n<={n} (worst m={rec.worst_m})")
    assert record("10b", ok, "; ".join(details) + " (target n <= 4356)", seconds)


def test_criterion_10c_combined_final(reductions):
    runs, seconds = reductions
    details, ok = [], seconds < 600
    for k, r in runs.items():
        ok &= r.n_bound <= 1600
        details.append(f"k={k}: n<={r.n_bound}")
    assert record("10c", ok, "; ".join(details) + " (target <= 1600)", seconds)


def test_criterion_11_large_k_chain():
    with Clock() as c:
        rec = pipeline.eliminate_large_k()
    ok = (rec["k_bound"] == 933 and all(s["holds"] for s in rec["steps"])
          and rec["lmn_stage_k_bound"] <= 7.7e8 and Fraction(rec["n_stage_bound"]["hi"]) < Fraction("7.8e113")
          and c.seconds < 60)
    assert record(11, ok, f"k < {rec['k_bound']}, {len(rec['steps'])} certified steps", c.seconds)


def _random_basis(rng, dim, size):
    while True:
        cols = [[rng.randint(-size, size) for _ in range(dim)] for _ in range(dim)]
        if lattice.determinant(cols) != 0:
            return cols


def _shortest(cols):
    dim = len(cols)
    best = min(sum(x * x for x in col) for col in cols)
    inv = [lattice.solve(cols, [int(i == j) for i in range(dim)]) for j in range(dim)]
    rows = [[inv[i][j] for i in range(dim)] for j in range(dim)]
    box = [math.isqrt(math.ceil(sum(x * x for x in r) * best)) + 1 for r in rows]
    for z in itertools.product(*[range(-b, b + 1) for b in box]):
        if any(z):
            v = [sum(z[j] * cols[j][i] for j in range(dim)) for i in range(dim)]
            best = min(best, sum(x * x for x in v))
    return best


def _powers(a):
    return {a ** e for e in range(1, 11)}


def test_criterion_12_property_suites():
    with Clock() as c:
        rng = random.Random(12)
        lll_ok = True
        for i in range(200):
            cols = _random_basis(rng, 3 + i % 3, 10 ** rng.randint(1, 6))
            lll_ok &= lattice.is_lll_reduced(lattice.lll_reduce(cols).gs)
        dw_ok = True
        for _ in range(50):
            cols = _random_basis(rng, rng.choice([2, 3]), 12)
            dw_ok &= lattice.de_weger_lower_bound(lattice.lll_reduce(cols)).delta_sq <= _shortest(cols)
        # exponents up to 10 suffice below 1000 since 2^10 > 1000
        powers = {a: _powers(a) for a in range(2, 1001)}
        md_ok = all(bool(mdep.mdep_test(a, b)) == bool(powers[a] & powers[b])
                    for a in range(2, 1001) for b in range(2, 1001))
        leg_ok = True
        for source in (cfrac.log3_over_log2, cfrac.golden_ratio, lambda bits: A.alpha_interval(3, bits)):
            tau = source(300)
            for M in (50, 120, 200):
                gap = cfrac.legendre_gap(cfrac.expand(source, M), M)
                for s in range(1, M):
                    r = round(tau.mid * s)
                    for rr in (r - 1, r, r + 1):
                        leg_ok &= abs(tau - Fraction(rr, s)).lo > Fraction(1, gap * s * s)
    ok = lll_ok and dw_ok and md_ok and leg_ok and c.seconds < 300
    detail = f"lll={lll_ok} deweger={dw_ok} mdep={md_ok} legendre={leg_ok}"
    assert record(12, ok, detail, c.seconds)
