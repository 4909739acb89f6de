"""Evaluators for linear-forms-in-logarithms lower bounds and the Guz lemma.

Every evaluator works on :class:`Interval` enclosures: lower bounds on
``log|Lambda|`` are the low endpoint of the enclosure and upper bounds on a
variable are the high endpoint, so rounding always goes the safe way.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import intervals as iv
from .intervals import Interval

BITS = 128


class Provenance(str, enum.Enum):
    MATVEEV = "Matveev"
    LMN = "LMN"
    GUZ = "Guz"
    COMPOSED = "Composed"


@dataclass(frozen=True)
class BoundResult:
    """A certified bound; ``value`` is the rational endpoint that is safe to use."""

    value: Fraction
    provenance: Provenance
    enclosure: Interval | None = None
    details: dict = field(default_factory=dict, compare=False)

    def __float__(self) -> float:
        return float(self.value)


def _iv(x) -> Interval:
    return iv.to_interval(x)


def _log(x) -> Interval:
    return iv.log(_iv(x), BITS)


@dataclass(frozen=True)
class MatveevInput:
    t: int
    D: int
    B: Fraction | int
    A: tuple

    def __post_init__(self):
        if self.t < 1 or self.D < 1:
            raise ValueError("need t >= 1 and D >= 1")
        if _iv(self.B).lo < 1:
            raise ValueError("B must be >= 1")
        if len(self.A) != self.t:
            raise ValueError(f"expected {self.t} values A_i, got {len(self.A)}")
        if any(_iv(a).lo < Fraction(16, 100) for a in self.A):
            raise ValueError("every A_i must be >= 0.16")


@dataclass(frozen=True)
class LMNInput:
    D: int
    logA1: Fraction | int
    logA2: Fraction | int
    b1: int
    b2: int

    def __post_init__(self):
        if self.D < 1:
            raise ValueError("D must be >= 1")
        floor = Fraction(1, self.D)
        if _iv(self.logA1).lo < floor or _iv(self.logA2).lo < floor:
            raise ValueError("log A_i must be >= 1/D")


def matveev_constant(t: int, D: int) -> Interval:
    """1.4 * 30**(t+3) * t**4.5 * D**2 * (1 + log D)."""
    t45 = Interval.point(t ** 4) * iv.sqrt(t, BITS)
    return _iv(Fraction(14, 10)) * (30 ** (t + 3)) * t45 * (D * D) * (1 + _log(D))


def matveev_lower_bound(inp: MatveevInput) -> BoundResult:
    """Lower bound on log|Gamma|: -1.4*30^(t+3)*t^4.5*D^2(1+log D)(1+log B)*prod A_i."""
    prod = Interval.point(1)
    for a in inp.A:
        prod = prod * _iv(a)
    enc = -(matveev_constant(inp.t, inp.D) * (1 + _log(inp.B)) * prod)
    return BoundResult(enc.lo, Provenance.MATVEEV, enc)


def lmn_lower_bound(inp: LMNInput) -> BoundResult:
    """Two-logarithm lower bound on log|Lambda|."""
    D = inp.D
    la1, la2 = _iv(inp.logA1), _iv(inp.logA2)
    b_prime = abs(inp.b1) / (la2 * D) + abs(inp.b2) / (la1 * D)
    # the max is increasing in b', so b'.hi gives the worst case
    term = iv.log(b_prime.hi, BITS) + Fraction(14, 100)
    floor = max(Fraction(21, D), Fraction(1, 2))
    hi = max(term.hi, floor)
    lo = max(term.lo, floor)
    mx = Interval(lo, hi)
    enc = -(_iv(Fraction(2434, 100)) * (D ** 4) * mx * mx * la1 * la2)
    return BoundResult(enc.lo, Provenance.LMN, enc, {"b_prime_hi": b_prime.hi})


def guz_bound(s: int, T) -> int:
    """Integer N with z < N whenever T > z / (log z)**s.

    Evaluates 2**s * T * (log T)**s and rounds up.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    T = _iv(T)
    if not T.lo > (4 * s * s) ** s:
        raise ValueError(f"Guz lemma needs T > (4s^2)^s = {(4 * s * s) ** s}")
    value = (2 ** s) * T * (_log(T.hi) ** s)
    return math.ceil(value.hi)


# ---------------------------------------------------------------------------
# composed bound on n in terms of k
# ---------------------------------------------------------------------------

@lru_cache(maxsize=1)
def _log15() -> Interval:
    return iv.log_rational(Fraction(3, 2), BITS)


def _a1(k: int) -> Interval:
    """A_1 = 2 k log k, an upper bound for D*h(f_k(alpha))."""
    return 2 * k * _log(k)


@dataclass(frozen=True)
class LemmaBranch:
    """One branch of the n(k) bound: the Guz input T and the resulting bound on n."""

    name: str
    matveev_coefficient: Interval
    guz_T: Interval
    guz_output: int
    n_bound: int
    envelope: Fraction


def branch_a(k: int) -> LemmaBranch:
    """n <= m**2: three logarithms, z = m."""
    if k < 3:
        raise ValueError("k must be >= 3")
    # log|Gamma| > -c (1 + log B), B = n**2 <= m**4
    c = matveev_constant(3, k) * _a1(k) * 1 * 1
    # m log 1.5 - log(19 m) < c (1 + 4 log m); divide by log m with m >= 4
    log4 = _log(4)
    T = (4 * c + c / log4 + _log(19) / log4 + 1) / _log15()
    m = guz_bound(1, T)
    envelope = _envelope(Fraction(29, 10) * 10 ** 29, 6, 6, k)
    return LemmaBranch("a", c, T, m, m * m, envelope)


def branch_b(k: int) -> LemmaBranch:
    """n > m**2: four logarithms with gamma_4 = L_m, z = sqrt(n)."""
    if k < 3:
        raise ValueError("k must be >= 3")
    # A_4 = 2 m k and m < sqrt(n): log|Gamma_1| > -c sqrt(n) (1 + 2 log n)
    c = matveev_constant(4, k) * _a1(k) * (2 * k)
    # (n/2) log 1.5 < c z (1 + 4 log z) with z = sqrt(n) > 7
    log7 = _log(7)
    T = 2 * c * (4 + 1 / log7) / _log15()
    z = guz_bound(1, T)
    envelope = _envelope(Fraction(85, 10) * 10 ** 34, 8, 6, k)
    return LemmaBranch("b", c, T, z, z * z, envelope)


def _envelope(const: Fraction, kp: int, lp: int, k: int) -> Fraction:
    """Lower endpoint of const * k**kp * (log k)**lp; a bound below it is below the true value."""
    return (const * Fraction(k) ** kp * _log(k) ** lp).lo


def lemma_envelope(k: int) -> Fraction:
    """8.5e34 k^8 (log k)^6, lower endpoint."""
    return _envelope(Fraction(85, 10) * 10 ** 34, 8, 6, k)


def bound_n_of_k(k: int) -> BoundResult:
    """Certified upper bound on n for a solution with parameter k >= 3."""
    if k < 3:
        raise ValueError("the composed bound is stated for k >= 3")
    a, b = branch_a(k), branch_b(k)
    value = max(a.n_bound, b.n_bound)
    env = lemma_envelope(k)
    return BoundResult(Fraction(value), Provenance.COMPOSED, None, {
        "branch_a": a.n_bound,
        "branch_b": b.n_bound,
        "m_bound_a": a.guz_output,
        "sqrt_n_bound_b": b.guz_output,
        "within_envelope": value <= env,
        "branch_a_within_envelope": a.n_bound <= a.envelope,
        "envelope": env,
    })


def matveev_envelope_holds(k: int, n: int) -> bool:
    """1.4*30^6*3^4.5*k^2(1+log k)(1+2 log n)*2k log k <= 1.6e12 k^3 (log k)^2 log n."""
    lhs = matveev_constant(3, k) * (1 + 2 * _log(n)) * _a1(k)
    rhs = Fraction(16, 10) * 10 ** 12 * Fraction(k) ** 3 * _log(k) ** 2 * _log(n)
    return lhs.hi <= rhs.lo


def ceil_log10(x: Fraction) -> int:
    """Smallest e with x <= 10**e, for x > 0."""
    e = iv._log10_floor(Fraction(x))
    return e if Fraction(10) ** e == x else e + 1

