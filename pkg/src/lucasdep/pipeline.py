"""Per-k proof orchestration and certificates.

For each k the pipeline bounds n through linear forms in logarithms, shrinks
the bound by lattice reduction, and closes the remaining finite range by
exhaustive search.  Orders k > 1000 are excluded once by a two-logarithm
argument combined with a continued-fraction gap.
"""

from __future__ import annotations

import json
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import algebraic, bounds, cfrac, lattice, mdep
from . import intervals as iv
from .intervals import Interval, PrecisionError
from .sequences import SequenceParams, check_power_identity, lucas_term, table_for

log = logging.getLogger(__name__)

LARGE_K = 1000

EXTERNAL_AXIOMS = {
    "Binet-error": "|L_n - f_k(alpha)(2 alpha - 1) alpha^(n-1)| < 3/2 for all k >= 2, n >= 2-k",
    "Matveev": "lower bound for nonzero linear forms in t logarithms",
    "LMN": "two-logarithm lower bound with constant 24.34",
    "Guz-lemma": "T > (4s^2)^s and T > z/(log z)^s imply z < 2^s T (log T)^s",
    "Legendre": "|tau - r/s| > 1/((a(M)+2) s^2) for 0 < s < M",
    "deWeger-LLL": "lattice distance bound and the resulting height bound",
    "Bat-7-smooth": "the ten L_n^(k) with largest prime factor <= 7 and n >= k+1",
    "GGL-3.14": "|u_n^x - 2^((n-2)x)(a+b)^x| < 71 * 2^((n-2)x)(a+b)^x / 2^(2k/5)",
    "Carmichael-primitive-divisor": "L_n^(2) has a primitive prime factor for n > 6",
}

SMOOTH_FIXTURE = [
    (2, 3, {2: 2}), (2, 4, {7: 1}), (2, 6, {2: 1, 3: 2}), (3, 4, {2: 1, 5: 1}),
    (3, 6, {5: 1, 7: 1}), (3, 7, {2: 6}), (3, 12, {2: 1, 3: 3, 5: 2}),
    (3, 15, {2: 4, 3: 1, 5: 2, 7: 1}), (4, 8, {2: 5, 5: 1}), (10, 15, {2: 2, 5: 3, 7: 2}),
]


# ---------------------------------------------------------------------------
# configuration and records
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProofConfig:
    precision_bits: int = 256
    C_first: int = 6 * 10 ** 194
    c3_first: int = 10 ** 28
    C_second: int = 10 ** 21
    fixed_passes: int = 2
    extra_passes: bool = True
    C_lattice4: int = 10 ** 512
    C_lattice4_second: int = 10 ** 30
    enlarge_factor: int = 10 ** 10
    max_enlargements: int = 5
    small_n: int = 50
    k2_n_max: int = 12
    workers: int = 1


@dataclass(frozen=True)
class LinearFormSpec:
    """|sum x_i eta_i| <= c3 exp(-c4 H) with |x_i| <= X_i."""

    name: str
    eta_names: tuple
    X: tuple
    c3: int
    c4: str = "log 1.5"

    def __post_init__(self):
        if not any(self.X) or self.c3 <= 0:
            raise ValueError("coefficient bounds and c3 must be positive")


@dataclass
class PassRecord:
    branch: str
    index: int
    form: LinearFormSpec
    C: int
    enlargements: list
    bound: int
    c1_sq: Fraction
    c1_min_sq: Fraction
    delta_sq: Fraction
    S: Fraction
    T: Fraction
    m_range: tuple | None = None
    worst_m: int | None = None

    def to_json(self) -> dict:
        return {
            "branch": self.branch, "pass": self.index, "form": self.form.name,
            "etas": list(self.form.eta_names), "X": [str(x) for x in self.form.X],
            "c3": str(self.form.c3), "c4": self.form.c4,
            "C": _sci_int(self.C), "enlarged_from": [_sci_int(c) for c in self.enlargements],
            "bound": self.bound,
            "c1": _sqrt_json(self.c1_sq), "c1_min_convention": _sqrt_json(self.c1_min_sq),
            "delta": _sqrt_json(self.delta_sq),
            "S": Interval.point(self.S).decimal(6), "T": Interval.point(self.T).decimal(6),
            "m_range": list(self.m_range) if self.m_range else None, "worst_m": self.worst_m,
        }


@dataclass
class ProofCertificate:
    k: int
    n_bound_initial: int | None
    large_k_branch: dict | None
    m_bound_after_lll: int | None
    n_bound_final: int
    searched: mdep.SearchWindow
    solutions: list
    external_axioms: list
    discrepancies: list
    stages: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n_bound_initial": None if self.n_bound_initial is None else str(self.n_bound_initial),
            "large_k_branch": self.large_k_branch,
            "m_bound_after_lll": self.m_bound_after_lll,
            "n_bound_final": self.n_bound_final,
            "searched": self.searched.to_json(),
            "solutions": [list(s) for s in self.solutions],
            "external_axioms": list(self.external_axioms),
            "discrepancies": list(self.discrepancies),
            "stages": self.stages,
        }


def _sci_int(x: int) -> str:
    """Exact compact form: "6e194" when x is a short mantissa times a power of 10."""
    digits = str(abs(x))
    mant = digits.rstrip("0")
    zeros = len(digits) - len(mant)
    if zeros < 6 or len(mant) > 12:
        return str(x)
    return f"{'-' if x < 0 else ''}{mant}e{zeros}"


def _sqrt_json(q: Fraction) -> dict:
    return iv.sqrt(q, 64 + max(0, -q.numerator.bit_length() + q.denominator.bit_length())).to_json(8)


def canonical_json(certs: Sequence[ProofCertificate]) -> str:
    return json.dumps([c.to_json() for c in sorted(certs, key=lambda c: c.k)],
                      sort_keys=True, indent=2)


# ---------------------------------------------------------------------------
# algebraic inputs
# ---------------------------------------------------------------------------

@lru_cache(maxsize=64)
def _base_etas(k: int, bits: int) -> tuple:
    a = algebraic.alpha_interval(k, bits + 16)
    f = algebraic.f_k_at(a, k)
    return (iv.log(f, bits), iv.log(2 * a - 1, bits), iv.log(a, bits))


def etas_for(k: int, bits: int, m: int | None = None) -> list[Interval]:
    """Enclosures of log f_k(alpha), log(2 alpha - 1), log alpha and optionally log L_m."""
    out = list(_base_etas(k, bits))
    if m is not None:
        out.append(iv.log_int(lucas_term(k, m), bits))
    return out


def _etas_at(k: int, m: int | None = None, min_bits: int = 0):
    def at(C: int) -> list[Interval]:
        bits = max(C.bit_length() + 48, min_bits)
        for _ in range(4):
            try:
                return etas_for(k, bits, m)
            except PrecisionError:
                bits *= 2
        return etas_for(k, bits, m)
    return at


def nonvanishing_check(k: int, form: str) -> bool:
    """Exact norm arguments showing the two linear forms cannot vanish.

    ``form`` is "Lambda" (three logarithms) or "Lambda1" (with log L_m).
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if form == "Lambda":
        lhs = Fraction(2 ** (k + 1) - 3)
        rhs = Fraction(2 ** (k + 1) * k ** k - (k + 1) ** (k + 1), (k - 1) ** 2)
        # |N(2a-1)| and 1/|N(f_k(a))| from the resultants must be these two numbers
        if abs(algebraic.norm_of_linear(2, -1, k)) != lhs or 1 / abs(algebraic.norm_of_fk(k)) != rhs:
            raise AssertionError(f"norm identities fail at k={k}")
        return lhs != rhs
    if form == "Lambda1":
        return abs(algebraic.norm_of_product(k)) < 1
    raise ValueError(f"unknown form {form!r}")


def _norm_record(k: int) -> dict:
    n2 = algebraic.norm_of_linear(2, -1, k)
    nf = algebraic.norm_of_fk(k)
    return {"N(2a-1)": str(n2), "N(f_k(a))": str(nf), "N(a)": str(algebraic.norm_of_linear(1, 0, k)),
            "sign_N(2a-1)": 1 if n2 > 0 else -1, "sign_N(f_k(a))": 1 if nf > 0 else -1}


# ---------------------------------------------------------------------------
# k > 1000
# ---------------------------------------------------------------------------

@dataclass
class ChainStep:
    name: str
    claim: str
    lhs: Interval
    rhs: Interval

    @property
    def holds(self) -> bool:
        return self.lhs.hi < self.rhs.lo

    def to_json(self) -> dict:
        return {"name": self.name, "claim": self.claim, "lhs": self.lhs.to_json(8),
                "rhs": self.rhs.to_json(8), "holds": self.holds}


class ChainError(ArithmeticError):
    pass


def _L(x) -> Interval:
    return iv.log(iv.to_interval(x), 128)


def eliminate_large_k() -> dict:
    """Replay the k > 1000 exclusion; returns the record with k_bound (expected 933)."""
    steps: list[ChainStep] = []
    k0 = Fraction(LARGE_K + 1)

    def add(name, claim, lhs, rhs):
        step = ChainStep(name, claim, iv.to_interval(lhs), iv.to_interval(rhs))
        steps.append(step)
        if not step.holds:
            raise ChainError(f"chain step {name!r} fails: {claim}")
        return step

    log2, log3 = _L(2), _L(3)
    # 1. Lemma bound below 2^(2k/5) at k = 1001; the gap grows since 2/5 log 2 > 8/k + 6/(k log k)
    add("lemma-below-2adic", "log(8.5e34) + 8 log k + 6 log log k < (2/5) k log 2 at k=1001",
        _L(Fraction(85, 10) * 10 ** 34) + 8 * _L(k0) + 6 * iv.log(_L(k0), 128),
        Fraction(2, 5) * k0 * log2)
    add("lemma-below-2adic-slope", "8/k + 6/(k log k) < (2/5) log 2 for k > 1000",
        Fraction(8) / k0 + 6 / (k0 * _L(k0)), Fraction(2, 5) * log2)
    # 2. LMN with D = 1, log A_1 = log A_2 = 2
    add("heights-fit", "max(h(3), log 3) <= log A_2 = 2", log3, Fraction(2) + Fraction(1, 10 ** 30))
    lmn_factor = bounds.lmn_lower_bound(bounds.LMNInput(1, 2, 2, 1, 1))
    add("lmn-constant", "24.34 * 2 * 2 < 98", Fraction(2434, 100) * 4, 98)
    # (2/5) k log 2 - log 284 < 98 M^2  =>  k < 354 M^2 + 21
    coef = 98 / (Fraction(2, 5) * log2)
    add("k-vs-M-coefficient", "98 / ((2/5) log 2) < 354", coef, 354)
    add("k-vs-M-offset", "log 284 / ((2/5) log 2) < 21", _L(284) / (Fraction(2, 5) * log2), 21)
    k_case21 = 354 * 21 ** 2 + 21
    # b' < n^2 < (8.5e34)^2 k^16 (log k)^12
    add("b-prime-constant", "(8.5e34)^2 < 7.3e69",
        Fraction(85, 10) ** 2 * 10 ** 68, Fraction(73, 10) * 10 ** 69)
    add("log-b-prime", "log(7.3e69) + 0.14 < 162", _L(Fraction(73, 10) * 10 ** 69) + Fraction(14, 100), 162)
    add("28-log-k", "162 + 28 log k < 52 log k for k > 1000 (log k > 6.75)",
        Fraction(162), 24 * _L(k0))
    add("k-vs-log-square", "354 * 52^2 + 21 / (log 1001)^2 < 10^6",
        354 * 52 ** 2 + Fraction(21) / _L(k0) ** 2, 10 ** 6)
    k_lmn = bounds.guz_bound(2, 10 ** 6)
    add("guz-s2", "Guz(2, 10^6) <= 7.7e8", k_lmn, Fraction(77, 10) * 10 ** 8 + 1)
    k_stage = max(k_lmn, k_case21)
    K = Fraction(77, 10) * 10 ** 8
    n_stage = Fraction(85, 10) * 10 ** 34 * K ** 8 * _L(K) ** 6
    add("n-stage", "8.5e34 k^8 (log k)^6 < 7.8e113 at k = 7.7e8", n_stage, Fraction(78, 10) * 10 ** 113)
    add("n-below-M", "7.8e113 < 10^114", Fraction(78, 10) * 10 ** 113, 10 ** 114)
    # Legendre at M = 10^114
    M = 10 ** 114
    cf = cfrac.expand(cfrac.log3_over_log2, M)
    gap = cfrac.legendre_gap(cf, M)
    a_max, a_idx = cfrac.max_quotient(cf, cf.first_index_above(M))
    add("legendre-gap", "a(M) + 2 <= 102", gap, 103)
    add("284-over-log2", "284 / log 2 < 410", 284 / log2, 410)
    add("41820", "410 * 102 <= 41820", 410 * 102, 41821)
    add("3.6e39", "41820 * 8.5e34 < 3.6e39", Fraction(41820) * Fraction(85, 10) * 10 ** 34,
        Fraction(36, 10) * 10 ** 39)
    add("log-3.6e39", "log(3.6e39) < 92", _L(Fraction(36, 10) * 10 ** 39), 92)
    add("14-log-k", "92 + 14 log k < 28 log k for k > 1000", Fraction(92), 14 * _L(k0))
    add("101", "28 / ((2/5) log 2) < 101", 28 / (Fraction(2, 5) * log2), 101)
    k_bound = bounds.guz_bound(1, 101)
    add("contradiction", "Guz(1, 101) <= 1000", k_bound, LARGE_K + 1)
    return {
        "k_bound": k_bound,
        "lmn_stage_k_bound": k_stage,
        "lmn_case_21_bound": k_case21,
        "lmn_minimal_value": Interval.point(lmn_factor.value).decimal(8),
        "n_stage_bound": n_stage.to_json(8),
        "legendre": {"M": "1e114", "N": cf.first_index_above(M), "a_max": a_max,
                     "a_max_index": a_idx, "gap": gap},
        "steps": [s.to_json() for s in steps],
        "axioms": ["GGL-3.14", "LMN", "Guz-lemma", "Legendre"],
    }


# ---------------------------------------------------------------------------
# k <= 1000
# ---------------------------------------------------------------------------

def m_bound_from_lemma(k: int, n0: int) -> int:
    """An M with m < M from m log 1.5 - log(19 m) < c (1 + 2 log n0)."""
    c = bounds.matveev_constant(3, k) * bounds._a1(k)
    K = c * (1 + 2 * _L(n0)) + _L(19)
    log15 = bounds._log15()
    M = math.ceil((2 * K / log15).hi) + 4
    # f(m) = m log 1.5 - log m is increasing for m >= 3; f(M) >= K certifies m < M
    if not (M * log15 - _L(M)).lo >= K.hi:
        raise ChainError(f"could not bound m for k={k}")
    return M


def _reduce(k: int, form: LinearFormSpec, C: int, cfg: ProofConfig, m: int | None = None):
    c4 = bounds._log15()
    return lattice.reduce_linear_form(_etas_at(k, m, cfg.precision_bits), C, list(form.X), form.c3, c4,
                                      cfg.enlarge_factor, cfg.max_enlargements)


def _auto_C(X: Sequence[int], dim: int) -> int:
    """Smallest power of 10 above (2T)^dim, a lattice determinant for which delta ~ 2T."""
    T = Fraction(1 + sum(X), 2)
    return 10 ** bounds.ceil_log10((2 * T) ** dim)


def _pass_record(branch, index, form, run, m_range=None, worst_m=None) -> PassRecord:
    o = run.outcome
    return PassRecord(branch, index, form, run.C, list(run.enlargements), o.new_bound,
                      o.c1_sq, o.c1_min_sq, o.delta_sq, o.S, o.T, m_range, worst_m)


def _form_lambda(N: int, c3: int) -> LinearFormSpec:
    return LinearFormSpec("Lambda", ("log f_k(alpha)", "log(2alpha-1)", "log alpha"),
                          (N, N, 9 * N), c3)


def _form_lambda1(N: int) -> LinearFormSpec:
    return LinearFormSpec("Lambda1", ("log f_k(alpha)", "log(2alpha-1)", "log alpha", "log L_m"),
                          (N, N, N * N, N), 2)


def _branch_b_pass(k, index, m_lo, m_hi, N, C, cfg) -> PassRecord | None:
    if m_lo > m_hi:
        return None
    form = _form_lambda1(N)
    worst, worst_run = None, None
    for m in range(m_lo, m_hi + 1):
        run = _reduce(k, form, C, cfg, m)
        if worst_run is None or run.bound > worst_run.bound:
            worst, worst_run = m, run
    return _pass_record("b", index, form, worst_run, (m_lo, m_hi), worst)


@dataclass
class SmallKResult:
    m_bound: int
    n_bound: int
    n_bound_a: int
    n_bound_b: int
    passes: list


def reduce_small_k(k: int, cfg: ProofConfig = ProofConfig()) -> SmallKResult:
    """Lattice reductions for 3 <= k <= 1000; returns the m and n bounds."""
    if not 3 <= k <= LARGE_K:
        raise ValueError("reduce_small_k needs 3 <= k <= 1000")
    n0 = int(bounds.bound_n_of_k(k).value)
    m_lemma = m_bound_from_lemma(k, n0)
    if 38 * m_lemma > cfg.c3_first:
        raise ChainError(f"c3 = {cfg.c3_first} is below 38 m for k={k}")
    passes: list[PassRecord] = []
    m_min = max(3, k + 1)

    # first pass over Lambda, valid in both cases (m > 14 is assumed; m <= 14 is kept aside)
    form = _form_lambda(n0, cfg.c3_first)
    run = _reduce(k, form, cfg.C_first, cfg)
    passes.append(_pass_record("a", 1, form, run))
    M1 = max(run.bound, 14)

    # case n <= m^2: iterate with X = 9 M^2
    M = M1
    index = 1
    while True:
        index += 1
        N = M * M
        form = _form_lambda(N, 38 * M)
        if index - 1 <= cfg.fixed_passes:
            C = cfg.C_second
        elif cfg.extra_passes:
            C = _auto_C(form.X, 3)
        else:
            break
        run = _reduce(k, form, C, cfg)
        passes.append(_pass_record("a", index, form, run))
        new_M = max(run.bound, 14)
        if new_M >= M and index - 1 > cfg.fixed_passes:
            break
        M = min(M, new_M)
    n_a = M * M if M >= m_min else 0

    # case n > m^2: Lambda1 with log L_m for every admissible m
    rec = _branch_b_pass(k, 1, m_min, M1, n0, cfg.C_lattice4, cfg)
    n_b = 0
    if rec is not None:
        passes.append(rec)
        n_b = 2 * rec.bound + 1
        rec2 = _branch_b_pass(k, 2, m_min, min(M1, math.isqrt(n_b)), n_b, cfg.C_lattice4_second, cfg)
        if rec2 is not None:
            passes.append(rec2)
            n_b = min(n_b, 2 * rec2.bound + 1)
        else:
            n_b = 0
    return SmallKResult(M1, max(n_a, n_b), n_a, n_b, passes)


# ---------------------------------------------------------------------------
# full proof
# ---------------------------------------------------------------------------

def _discrepancies(k: int) -> list[str]:
    notes = []
    if k == 3:
        notes.append("smooth-list conclusion states (k,m,n)=(3,0,6), but L_6^(3)=35 and "
                     "L_7^(3)=64=2^6; the dependent triple is (3,0,7)")
    if k >= 3:
        notes.append("c1 uses the maximum of |b_1|/|b*_j| (sound); the minimum is logged "
                     "as c1_min_convention for comparison")
        notes.append("norms are reported with the resultant sign; identities are compared "
                     "in absolute value")
    return notes


def _prove_k2(cfg: ProofConfig) -> ProofCertificate:
    window = mdep.SearchWindow((2, 2), cfg.k2_n_max, 0)
    hits = mdep.search(window)
    return ProofCertificate(
        k=2, n_bound_initial=None, large_k_branch=None, m_bound_after_lll=None,
        n_bound_final=cfg.k2_n_max, searched=window,
        solutions=[(h.m, h.n) for h in hits],
        external_axioms=["Carmichael-primitive-divisor"],
        discrepancies=[],
        stages={"ggl_equality_k": algebraic.verify_ggl(2),
                "nonvanishing": {"Lambda": nonvanishing_check(2, "Lambda")},
                "witnesses": [h.to_json() for h in hits]},
    )


def prove_k(k: int, cfg: ProofConfig = ProofConfig(), large_k: dict | None = None) -> ProofCertificate:
    if k == 2:
        return _prove_k2(cfg)
    if not 3 <= k <= LARGE_K:
        raise ValueError("prove_k handles 2 <= k <= 1000")
    if not (nonvanishing_check(k, "Lambda") and nonvanishing_check(k, "Lambda1")):
        raise ChainError(f"a linear form may vanish at k={k}")
    if not check_power_identity(k):
        raise ChainError(f"power identity fails at k={k}")
    lemma = bounds.bound_n_of_k(k)
    if not lemma.details["within_envelope"]:
        raise ChainError(f"n(k) exceeds the envelope at k={k}")
    red = reduce_small_k(k, cfg)
    n_max = max(red.n_bound, cfg.small_n, k + 1)
    window = mdep.SearchWindow((k, k), n_max, 0)
    hits = mdep.search(window)
    smooth = [(kk, n) for kk, n, _ in SMOOTH_FIXTURE if kk == k]
    return ProofCertificate(
        k=k,
        n_bound_initial=int(lemma.value),
        large_k_branch=large_k,
        m_bound_after_lll=red.m_bound,
        n_bound_final=red.n_bound,
        searched=window,
        solutions=[(h.m, h.n) for h in hits],
        external_axioms=["Binet-error", "Matveev", "Guz-lemma", "deWeger-LLL", "Bat-7-smooth"],
        discrepancies=_discrepancies(k),
        stages={
            "norms": _norm_record(k),
            "nonvanishing": {"Lambda": True, "Lambda1": True},
            "lemma": {"branch_a": _sci_int(lemma.details["branch_a"]),
                      "branch_b": _sci_int(lemma.details["branch_b"])},
            "reduction": [p.to_json() for p in red.passes],
            "n_bound_case_a": red.n_bound_a,
            "n_bound_case_b": red.n_bound_b,
            "smooth_fixture_indices": smooth,
            "witnesses": [h.to_json() for h in hits],
        },
    )


def _prove_one(args):
    k, cfg, large_k = args
    return prove_k(k, cfg, large_k)


def prove(k_range: Iterable[int], cfg: ProofConfig = ProofConfig()) -> list[ProofCertificate]:
    ks = sorted(set(k_range))
    if any(k < 2 or k > LARGE_K for k in ks):
        raise ValueError("k range must lie within [2, 1000]")
    large_k = eliminate_large_k()
    jobs = [(k, cfg, large_k if k >= 3 else None) for k in ks]
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            certs = list(pool.map(_prove_one, jobs))
    else:
        certs = [_prove_one(j) for j in jobs]
    return sorted(certs, key=lambda c: c.k)


# ---------------------------------------------------------------------------
# certificate checking
# ---------------------------------------------------------------------------

def verify_certificate(doc: dict, cfg: ProofConfig = ProofConfig(), rerun_lattice: bool = False) -> list[str]:
    """Re-derive the cheap parts of a certificate; returns a list of problems (empty if valid).

    With ``rerun_lattice`` the branch-a passes and the worst m of each
    branch-b pass are recomputed from the recorded C and coefficient bounds.
    """
    problems = []
    k = doc["k"]
    searched = doc["searched"]
    if searched["m_min"] != 0:
        problems.append("search window does not start at m = 0")
    if searched["n_max"] < doc["n_bound_final"]:
        problems.append("search window is below the final bound")
    window = mdep.SearchWindow(tuple(searched["k_range"]), searched["n_max"], searched["m_min"])
    found = [[h.m, h.n] for h in mdep.search(window)]
    if found != doc["solutions"]:
        problems.append(f"search reproduces {found}, certificate lists {doc['solutions']}")
    if k >= 3:
        n0 = int(bounds.bound_n_of_k(k).value)
        if str(n0) != doc["n_bound_initial"]:
            problems.append("initial bound differs")
        stages = doc["stages"]
        if doc["n_bound_final"] != max(stages["n_bound_case_a"], stages["n_bound_case_b"]):
            problems.append("final bound is not the max of the two cases")
        first = stages["reduction"][0]
        if doc["m_bound_after_lll"] != max(first["bound"], 14):
            problems.append("m bound does not match the first pass")
        if rerun_lattice:
            for p in doc["stages"]["reduction"]:
                X = [int(x) for x in p["X"]]
                c3 = int(p["c3"])
                form = LinearFormSpec(p["form"], tuple(p["etas"]), tuple(X), c3)
                C = _parse_sci_int(p["C"])
                run = _reduce(k, form, C, ProofConfig(max_enlargements=0), p.get("worst_m"))
                if run.bound != p["bound"]:
                    problems.append(f"pass {p['branch']}{p['pass']} gives {run.bound}, recorded {p['bound']}")
    return problems


def _parse_sci_int(text: str) -> int:
    if "e" not in text:
        return int(text)
    mant, exp = text.split("e")
    return int(mant) * 10 ** int(exp)
