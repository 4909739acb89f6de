"""Certified continued fractions and the Legendre gap bound."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from . import intervals as iv
from .intervals import Interval, PrecisionError

MAX_BITS = 1 << 16

ValueSource = Union[Interval, Callable[[int], Interval]]


@dataclass(frozen=True)
class ContinuedFraction:
    value_enclosure: Interval
    partial_quotients: tuple
    convergents: tuple  # (p_i, q_i)

    @property
    def N(self) -> int:
        return len(self.partial_quotients) - 1

    def first_index_above(self, M: int) -> int | None:
        for i, (_, q) in enumerate(self.convergents):
            if q > M:
                return i
        return None

    def to_json(self) -> dict:
        return {
            "partial_quotients": list(self.partial_quotients),
            "N": self.N,
            "q_N": str(self.convergents[-1][1]),
            "value": self.value_enclosure.to_json(),
        }


def convergents(quotients) -> list[tuple[int, int]]:
    out = []
    p0, q0, p1, q1 = 1, 0, 0, 1  # p_{-1}, q_{-1}, p_{-2}, q_{-2}
    for a in quotients:
        p, q = a * p0 + p1, a * q0 + q1
        out.append((p, q))
        p1, q1, p0, q0 = p0, q0, p, q
    return out


def _certified_floor(x: Interval) -> int:
    a = x.floor()
    if x.lo == x.hi:
        return a
    if not x.inside(a, a + 1):
        # the enclosure touches an integer, which the floor check lets through
        raise PrecisionError(f"floor not certified on {x!r}")
    return a


def _expand_enclosure(x: Interval, M: int) -> tuple[list[int], int]:
    """Quotients up to the first q_N > M; second value is the number certified."""
    quotients: list[int] = []
    p0, q0, p1, q1 = 1, 0, 0, 1
    while True:
        a = _certified_floor(x)
        quotients.append(a)
        p, q = a * p0 + p1, a * q0 + q1
        p1, q1, p0, q0 = p0, q0, p, q
        if q > M:
            return quotients, len(quotients)
        rest = x - a
        if rest.lo == rest.hi == 0:
            return quotients, len(quotients)  # an exact rational has terminated
        if not rest.excludes_zero():
            raise PrecisionError("complete quotient not separated from 0")
        x = rest.reciprocal()


def expand(value: ValueSource, M: int, bits: int | None = None) -> ContinuedFraction:
    """Continued fraction of an irrational up to the first N with q_N > M.

    ``value`` is an enclosure or a function ``bits -> enclosure``; in the
    second case the precision doubles whenever a partial quotient cannot be
    certified, up to MAX_BITS.
    """
    if M < 1:
        raise ValueError("M must be >= 1")
    if isinstance(value, Interval):
        try:
            quotients, _ = _expand_enclosure(value, M)
        except PrecisionError as exc:
            raise PrecisionError(f"enclosure too wide: {exc}") from exc
        return ContinuedFraction(value, tuple(quotients), tuple(convergents(quotients)))
    bits = bits or 2 * M.bit_length() + 128
    last_error = None
    while bits <= MAX_BITS:
        enc = value(bits)
        try:
            quotients, _ = _expand_enclosure(enc, M)
            return ContinuedFraction(enc, tuple(quotients), tuple(convergents(quotients)))
        except PrecisionError as exc:
            last_error = exc
            bits *= 2
    raise PrecisionError(f"could not certify the expansion at {MAX_BITS} bits: {last_error}")


def legendre_gap(cf: ContinuedFraction, M: int) -> int:
    """a(M) + 2, where a(M) is the largest partial quotient up to the first q_N > M.

    Every 0 < s < M and integer r then satisfy |tau - r/s| > 1/((a(M)+2) s^2).
    """
    N = cf.first_index_above(M)
    if N is None:
        raise ValueError(f"expansion stops at q = {cf.convergents[-1][1]}, not past M")
    return max(cf.partial_quotients[: N + 1]) + 2


def max_quotient(cf: ContinuedFraction, upto: int) -> tuple[int, int]:
    """(value, index) of the largest partial quotient with index <= upto; first index on ties."""
    qs = cf.partial_quotients[: upto + 1]
    best = max(qs)
    return best, qs.index(best)


# -- named constants ---------------------------------------------------------

def log3_over_log2(bits: int) -> Interval:
    return iv.log_rational(3, bits + 8) / iv.log_rational(2, bits + 8)


def golden_ratio(bits: int) -> Interval:
    return (1 + iv.sqrt(5, bits + 8)) / 2


CONSTANTS: dict[str, Callable[[int], Interval]] = {
    "log3/log2": log3_over_log2,
    "golden": golden_ratio,
}


def decimal_source(text: str) -> Callable[[int], Interval]:
    """A decimal literal is exact; treat it as a point enclosure."""
    q = Fraction(text)
    return lambda bits: Interval.point(q)
