"""Closed rational intervals with outward rounding.

Every endpoint is an exact :class:`fractions.Fraction`.  Transcendental
functions (``log``, ``sqrt``) are evaluated in fixed point on Python
integers with floor/ceiling rounding, so an :class:`Interval` returned by
this module always contains the true value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

Number = Union[int, Fraction]


class PrecisionError(ArithmeticError):
    """An enclosure was too wide to decide something; retry with more bits."""

    def __init__(self, message: str, suggested_bits: int | None = None):
        super().__init__(message)
        self.suggested_bits = suggested_bits


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to Fraction")


def _floor_div(a: int, b: int) -> int:
    return a // b


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _on_grid(x: Fraction, bits: int) -> bool:
    d = x.denominator
    return d & (d - 1) == 0 and d.bit_length() <= bits + 1


def round_down(x: Fraction, bits: int) -> Fraction:
    """Largest multiple of ``2**-bits`` that is <= x."""
    if _on_grid(x, bits):
        return x
    return Fraction(_floor_div(x.numerator << bits, x.denominator), 1 << bits)


def round_up(x: Fraction, bits: int) -> Fraction:
    if _on_grid(x, bits):
        return x
    return Fraction(_ceil_div(x.numerator << bits, x.denominator), 1 << bits)


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x) -> "Interval":
        q = _frac(x)
        return cls(q, q)

    @classmethod
    def of(cls, x) -> "Interval":
        return x if isinstance(x, Interval) else cls.point(x)

    # -- queries ---------------------------------------------------------
    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        return self.lo <= _frac(x) <= self.hi

    def __contains__(self, x) -> bool:
        return self.contains(x)

    def inside(self, lo, hi) -> bool:
        """True if the enclosure lies strictly inside the open interval (lo, hi)."""
        return _frac(lo) < self.lo and self.hi < _frac(hi)

    def excludes_zero(self) -> bool:
        return self.lo > 0 or self.hi < 0

    def is_positive(self) -> bool:
        return self.lo > 0

    def __float__(self) -> float:
        return float(self.mid)

    def __repr__(self) -> str:
        return f"Interval({float(self.lo)!r}, {float(self.hi)!r})"

    def round(self, bits: int) -> "Interval":
        return Interval(round_down(self.lo, bits), round_up(self.hi, bits))

    def abs_upper(self) -> Fraction:
        return max(abs(self.lo), abs(self.hi))

    def floor(self) -> int:
        """Certified floor; raises if the enclosure straddles an integer."""
        a = math.floor(self.lo)
        if math.floor(self.hi) != a:
            raise PrecisionError(f"floor ambiguous on {self!r}")
        return a

    def hull(self, other: "Interval") -> "Interval":
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def intersect(self, other: "Interval") -> "Interval":
        return Interval(max(self.lo, other.lo), min(self.hi, other.hi))

    def decimal(self, digits: int = 20) -> str:
        """Midpoint in scientific notation with enough digits to be informative."""
        return _sci(self.mid, digits)

    def to_json(self, digits: int = 20) -> dict:
        return {"lo": _sci_down(self.lo, digits), "hi": _sci_up(self.hi, digits)}

    # -- arithmetic -------------------------------------------------------
    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __abs__(self):
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Interval(Fraction(0), max(-self.lo, self.hi))

    def __add__(self, other):
        o = Interval.of(other)
        return Interval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __sub__(self, other):
        o = Interval.of(other)
        return Interval(self.lo - o.hi, self.hi - o.lo)

    def __rsub__(self, other):
        return Interval.of(other) - self

    def __mul__(self, other):
        o = Interval.of(other)
        if self.lo >= 0 and o.lo >= 0:
            return Interval(self.lo * o.lo, self.hi * o.hi)
        p = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(min(p), max(p))

    __rmul__ = __mul__

    def reciprocal(self) -> "Interval":
        if not self.excludes_zero():
            raise PrecisionError(f"division by an interval containing 0: {self!r}")
        return Interval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        return self * Interval.of(other).reciprocal()

    def __rtruediv__(self, other):
        return Interval.of(other) * self.reciprocal()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            raise TypeError("integer exponents only")
        if e < 0:
            return (self ** (-e)).reciprocal()
        if e == 0:
            return Interval.point(1)
        if self.lo >= 0:
            return Interval(self.lo ** e, self.hi ** e)
        if self.hi <= 0:
            a, b = (-self.hi) ** e, (-self.lo) ** e
            return Interval(a, b) if e % 2 == 0 else Interval(-b, -a)
        if e % 2:
            return Interval(self.lo ** e, self.hi ** e)
        return Interval(Fraction(0), max(self.lo ** e, self.hi ** e))


def _sci(x: Fraction, digits: int) -> str:
    if x == 0:
        return "0"
    sign = "-" if x < 0 else ""
    x = abs(x)
    e = _log10_floor(x)
    scaled = x / Fraction(10) ** (e - digits + 1)
    m = round(scaled)
    if m >= 10 ** digits:
        m //= 10
        e += 1
    s = str(m)
    return f"{sign}{s[0]}.{s[1:]}e{e}"


def _sci_dir(x: Fraction, digits: int, up: bool) -> str:
    if x == 0:
        return "0"
    neg = x < 0
    ax = abs(x)
    e = _log10_floor(ax)
    scaled = ax / Fraction(10) ** (e - digits + 1)
    # magnitude rounded away from zero exactly when the signed value must move that way
    away = up != neg
    m = math.ceil(scaled) if away else math.floor(scaled)
    s = str(m)
    if len(s) > digits:
        e += 1
        s = s[:digits] if not away else str(_ceil_div(m, 10))
    return f"{'-' if neg else ''}{s[0]}.{s[1:]}e{e}"


def _sci_down(x: Fraction, digits: int) -> str:
    return _sci_dir(x, digits, up=False)


def _sci_up(x: Fraction, digits: int) -> str:
    return _sci_dir(x, digits, up=True)


def _log10_floor(x: Fraction) -> int:
    """floor(log10(x)) for x > 0, exactly."""
    e = len(str(x.numerator)) - len(str(x.denominator))
    # adjust: 10**e <= x < 10**(e+1)
    while Fraction(10) ** e > x:
        e -= 1
    while Fraction(10) ** (e + 1) <= x:
        e += 1
    return e


# ---------------------------------------------------------------------------
# fixed-point transcendental kernels
# ---------------------------------------------------------------------------

def _atanh_fixed(num: int, den: int, w: int) -> tuple[int, int]:
    """Integer bounds lo <= atanh(num/den) * 2**w <= hi for 0 <= num/den <= 1/2."""
    if num == 0:
        return 0, 0
    one = 1 << w
    t_lo = (num << w) // den
    t_hi = _ceil_div(num << w, den)
    t2_lo = (t_lo * t_lo) >> w
    t2_hi = _ceil_div(t_hi * t_hi, one)
    p_lo, p_hi = t_lo, t_hi
    s_lo, s_hi = t_lo, t_hi
    j = 0
    while True:
        j += 1
        p_lo = (p_lo * t2_lo) >> w
        p_hi = _ceil_div(p_hi * t2_hi, one)
        s_lo += p_lo // (2 * j + 1)
        s_hi += _ceil_div(p_hi, 2 * j + 1)
        if p_hi <= 1:
            # remaining terms are a geometric tail with ratio <= 1/4
            s_hi += 2
            return s_lo, s_hi


@lru_cache(maxsize=64)
def _ln2_fixed(w: int) -> tuple[int, int]:
    lo, hi = _atanh_fixed(1, 3, w)
    return 2 * lo, 2 * hi


def _guard_for(bits: int) -> int:
    return 16 + 2 * max(bits, 1).bit_length()


def log_rational(x, bits: int) -> Interval:
    """Certified enclosure of ``log(x)`` for a positive rational, width ~2**-bits."""
    q = _frac(x)
    if q <= 0:
        raise ValueError("log of a non-positive number")
    if q == 1:
        return Interval.point(0)
    # q = 2**e * y with y in [2/3, 4/3)
    e = q.numerator.bit_length() - q.denominator.bit_length()
    y = q / Fraction(2) ** e
    while y >= Fraction(4, 3):
        y /= 2
        e += 1
    while y < Fraction(2, 3):
        y *= 2
        e -= 1
    w = bits + _guard_for(bits) + max(abs(e), 1).bit_length()
    t = (y - 1) / (y + 1)
    lo, hi = _atanh_fixed(abs(t.numerator), t.denominator, w)
    if t < 0:
        lo, hi = -hi, -lo
    lo, hi = 2 * lo, 2 * hi
    if e:
        l2lo, l2hi = _ln2_fixed(w)
        if e > 0:
            lo += e * l2lo
            hi += e * l2hi
        else:
            lo += e * l2hi
            hi += e * l2lo
    scale = 1 << w
    return Interval(Fraction(lo, scale), Fraction(hi, scale)).round(bits + 8)


def log(x, bits: int) -> Interval:
    """Enclosure of log over a positive interval (log is increasing)."""
    iv = Interval.of(x)
    if iv.lo <= 0:
        raise PrecisionError(f"log of an interval not certainly positive: {iv!r}")
    if iv.lo == iv.hi:
        return log_rational(iv.lo, bits)
    return Interval(log_rational(iv.lo, bits).lo, log_rational(iv.hi, bits).hi)


def sqrt(x, bits: int) -> Interval:
    iv = Interval.of(x)
    if iv.lo < 0:
        raise PrecisionError(f"sqrt of an interval not certainly non-negative: {iv!r}")

    def down(q: Fraction) -> Fraction:
        return Fraction(math.isqrt((q.numerator << (2 * bits)) // q.denominator), 1 << bits)

    def up(q: Fraction) -> Fraction:
        n = _ceil_div(q.numerator << (2 * bits), q.denominator)
        r = math.isqrt(n)
        if r * r < n:
            r += 1
        return Fraction(r, 1 << bits)

    return Interval(down(iv.lo), up(iv.hi))


@lru_cache(maxsize=256)
def _log_int_cached(n: int, bits: int) -> Interval:
    return log_rational(n, bits)


def log_int(n: int, bits: int) -> Interval:
    return _log_int_cached(n, bits)


def to_interval(x, bits: int = 128) -> Interval:
    """Coerce ints, Fractions, decimal strings, floats or Intervals."""
    if isinstance(x, Interval):
        return x
    if isinstance(x, float):
        # decimal literal semantics: 1.4 means 14/10, not the nearest double
        return Interval.point(Fraction(repr(x)))
    return Interval.point(_frac(x))
