"""Certified arithmetic with the dominant root of x^k - x^(k-1) - ... - 1.

The dominant root alpha(k) is enclosed by a dyadic interval whose endpoints
are checked by exact sign evaluation.  Norms are exact rationals obtained
from resultants, and heights come from the minimal polynomial together with
certified disks around every complex root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import mpmath
import numpy as np

from . import intervals as iv
from .intervals import Interval, PrecisionError
from .sequences import lucas_term

MAX_BITS = 1 << 20


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients lowest degree first."""

    coeffs: tuple

    def __post_init__(self):
        c = tuple(int(a) for a in self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c = c[:-1]
        if not c:
            c = (0,)
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * a for i, a in enumerate(self.coeffs))[1:] or (0,))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(other * a for a in self.coeffs))
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPolynomial":
        out = IntPolynomial((1,))
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def content(self) -> int:
        return math.gcd(*self.coeffs)

    def primitive(self) -> "IntPolynomial":
        """Divide out the content and make the leading coefficient positive."""
        g = self.content() or 1
        if self.leading < 0:
            g = -g
        return IntPolynomial(tuple(a // g for a in self.coeffs))

    def eval_interval(self, x: Interval) -> Interval:
        acc = Interval.point(0)
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc


def psi(k: int) -> IntPolynomial:
    """Characteristic polynomial x^k - x^(k-1) - ... - x - 1."""
    if k < 2:
        raise ValueError("k must be >= 2")
    return IntPolynomial((-1,) * k + (1,))


@dataclass(frozen=True)
class PrecisionContext:
    working_bits: int = 256
    guard_bits: int = 32

    def __post_init__(self):
        if self.working_bits < 64 or self.guard_bits < 32:
            raise ValueError("need working_bits >= 64 and guard_bits >= 32")

    def doubled(self) -> "PrecisionContext":
        if 2 * self.working_bits > MAX_BITS:
            raise PrecisionError("precision cap of 2**20 bits exceeded")
        return PrecisionContext(2 * self.working_bits, self.guard_bits)


@dataclass(frozen=True)
class RealAlgebraic:
    minpoly: IntPolynomial
    lo: Fraction
    hi: Fraction
    precision_bits: int

    @property
    def enclosure(self) -> Interval:
        return Interval(self.lo, self.hi)

    def refine(self, bits: int) -> "RealAlgebraic":
        """Bisect until the width is at most 2**-bits (exact sign tests)."""
        lo, hi = self.lo, self.hi
        p = self.minpoly
        s_lo = _sign(p(lo))
        if s_lo == 0:
            return RealAlgebraic(p, lo, lo, bits)
        target = Fraction(1, 1 << bits)
        while hi - lo > target:
            mid = iv.round_down((lo + hi) / 2, bits + 1)
            s = _sign(p(mid))
            if s == 0:
                return RealAlgebraic(p, mid, mid, bits)
            if s == s_lo:
                lo = mid
            else:
                hi = mid
        return RealAlgebraic(p, lo, hi, bits)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


# ---------------------------------------------------------------------------
# dominant root
# ---------------------------------------------------------------------------

def _pow_fixed(a: int, e: int, w: int, up: bool) -> int:
    """Directed-rounded (a/2^w)**e as an integer scaled by 2^w, for a >= 0."""
    one = 1 << w
    result = one
    base = a
    while e:
        if e & 1:
            prod = result * base
            result = -((-prod) >> w) if up else prod >> w
        e >>= 1
        if e:
            sq = base * base
            base = -((-sq) >> w) if up else sq >> w
    return result


def _g_sign(k: int, a: int, w: int, guard: int) -> int:
    """Certified sign of g(x) = 1 - x^k (2 - x) at x = a/2^w (0 if undecided).

    For x > 1, g(x) = (x - 1) * psi_k(x), so the signs agree.
    """
    W = w + guard
    A = a << guard
    two_minus = (2 << W) - A
    p_lo = _pow_fixed(A, k, W, up=False)
    p_hi = _pow_fixed(A, k, W, up=True)
    one = 1 << W
    # g = 1 - x^k (2-x) with (2-x) >= 0
    g_hi = one - ((p_lo * two_minus) >> W)
    g_lo = one - -((-(p_hi * two_minus)) >> W)
    if g_hi < 0:
        return -1
    if g_lo > 0:
        return 1
    return 0


def _newton_alpha(k: int, w: int) -> int:
    """Approximate alpha(k) * 2^w by Newton's method on g from x = 2."""
    one = 1 << w
    x = 2 * one
    for _ in range(10 * w.bit_length() + 64):
        p = _pow_fixed(x, k - 1, w, up=False)        # x^(k-1)
        pk = (p * x) >> w                              # x^k
        g = one - ((pk * (2 * one - x)) >> w)
        dg = (p * ((k + 1) * x - 2 * k * one)) >> w    # g'(x) = x^(k-1)((k+1)x - 2k)
        if dg <= 0:
            break
        step = (g << w) // dg
        x_new = x - step
        if abs(x_new - x) <= 2:
            return x_new
        x = x_new
    return x


@lru_cache(maxsize=512)
def _dominant_root_cached(k: int, bits: int) -> RealAlgebraic:
    guard = 32 + 2 * k.bit_length()
    lower = 2 * (1 - Fraction(1, 1 << k))
    for attempt in range(8):
        w = bits + 2
        a = _newton_alpha(k, w + 8) >> 8
        lo_a, hi_a = a - 2, a + 2
        if _g_sign(k, lo_a, w, guard) < 0 and _g_sign(k, hi_a, w, guard) > 0:
            lo, hi = Fraction(lo_a, 1 << w), Fraction(hi_a, 1 << w)
            root = RealAlgebraic(psi(k), lo, hi, bits)
            if not (lower < lo and hi < 2):
                raise PrecisionError(f"alpha({k}) enclosure escapes (2(1-2^-k), 2)")
            return root
        guard *= 2
    # Newton failed to bracket: fall back to exact bisection from the a priori interval
    start = RealAlgebraic(psi(k), lower, Fraction(2), 1)
    return start.refine(bits)


def dominant_root(k: int, ctx: PrecisionContext | int = PrecisionContext()) -> RealAlgebraic:
    """Enclosure of alpha(k) of width <= 2**-working_bits.

    The interval endpoints are dyadic and the sign change of psi_k across
    them is certified in directed-rounded fixed point.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    bits = ctx if isinstance(ctx, int) else ctx.working_bits
    # alpha sits within 2**-k of 2, so fewer than ~k bits cannot certify the interval
    return _dominant_root_cached(k, max(bits, k + 16))


def alpha_interval(k: int, bits: int) -> Interval:
    return dominant_root(k, max(bits, 64)).enclosure


# ---------------------------------------------------------------------------
# f_k and the Binet-like approximation
# ---------------------------------------------------------------------------

def f_k_at(x, k: int) -> Interval:
    """Enclosure of f_k(x) = (x - 1) / (2 + (k + 1)(x - 2)).

    f_k has derivative (1 - k)/den^2 < 0 wherever it is defined, so on an
    interval whose denominator keeps one sign the image is [f(hi), f(lo)].
    """
    x = Interval.of(x)
    den = Interval((k + 1) * x.lo - 2 * k, (k + 1) * x.hi - 2 * k)
    if not den.excludes_zero():
        raise PrecisionError(f"denominator of f_{k} straddles 0 on {x!r}")

    def f(t: Fraction) -> Fraction:
        return (t - 1) / ((k + 1) * t - 2 * k)

    return Interval(f(x.hi), f(x.lo))


@dataclass(frozen=True)
class BinetError:
    k: int
    n: int
    error_enclosure: Interval

    @property
    def certified(self) -> bool:
        return self.error_enclosure.inside(Fraction(-3, 2), Fraction(3, 2))


def _binet_coefficient(k: int, bits: int) -> tuple[Interval, Interval]:
    alpha = alpha_interval(k, bits)
    coeff = (f_k_at(alpha, k) * (2 * alpha - 1)).round(bits)
    return alpha, coeff


def binet_error(k: int, n: int, ctx: PrecisionContext | int = PrecisionContext()) -> BinetError:
    """Enclosure of e_k(n) = L_n - f_k(alpha)(2 alpha - 1) alpha^(n-1)."""
    if n < 2 - k:
        raise ValueError(f"n must be >= 2-k = {2 - k}")
    bits = ctx if isinstance(ctx, int) else ctx.working_bits
    while True:
        alpha, coeff = _binet_coefficient(k, bits)
        main = coeff * (alpha ** (n - 1))
        err = BinetError(k, n, Interval.point(lucas_term(k, n)) - main)
        if err.certified:
            return err
        if 2 * bits > MAX_BITS:
            raise PrecisionError(f"could not certify |e_{k}({n})| < 3/2")
        bits *= 2


def binet_errors(k: int, n_stop: int, bits: int = 256) -> list[BinetError]:
    """Errors for every 2-k <= n < n_stop, sharing one power ladder."""
    alpha, coeff = _binet_coefficient(k, bits)
    power = (alpha ** (1 - k)).round(bits + 16)      # alpha^(n-1) at n = 2-k
    out = []
    for n in range(2 - k, n_stop):
        main = coeff * power
        err = BinetError(k, n, Interval.point(lucas_term(k, n)) - main)
        if not err.certified:
            # alpha^(n-1) outgrew the working precision; redo this n on its own
            err = binet_error(k, n, 2 * bits)
        out.append(err)
        power = (power * alpha).round(bits + 16)
    return out


# ---------------------------------------------------------------------------
# resultants, norms, minimal polynomials
# ---------------------------------------------------------------------------

def _strip(p: list) -> list:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_rem(p: list, q: list) -> list:
    p = list(p)
    dq, lq = len(q) - 1, q[-1]
    while len(p) - 1 >= dq and any(p):
        c = p[-1] / lq
        shift = len(p) - 1 - dq
        for i, b in enumerate(q):
            p[shift + i] -= c * b
        p.pop()
        _strip(p)
        if len(p) - 1 < dq:
            break
    return _strip(p) if p else [Fraction(0)]


def resultant(p: IntPolynomial | Sequence, q: IntPolynomial | Sequence) -> Fraction:
    """Res(p, q) = lc(p)^deg(q) * prod q(roots of p), by the Euclidean algorithm over Q."""
    a = [Fraction(c) for c in (p.coeffs if isinstance(p, IntPolynomial) else p)]
    b = [Fraction(c) for c in (q.coeffs if isinstance(q, IntPolynomial) else q)]
    _strip(a)
    _strip(b)
    if (len(a) == 1 and a[0] == 0) or (len(b) == 1 and b[0] == 0):
        return Fraction(0)
    scale = Fraction(1)
    while True:
        m, n = len(a) - 1, len(b) - 1
        if n == 0:
            return scale * b[0] ** m
        r = _poly_rem(a, b)
        if len(r) == 1 and r[0] == 0:
            return Fraction(0)
        deg_r = len(r) - 1
        scale *= (-1) ** (m * n) * b[-1] ** (m - deg_r)
        a, b = b, r


def norm_of_linear(a: int, b: int, k: int) -> Fraction:
    """Field norm N(a*alpha + b) over Q(alpha), as Res(psi_k, a x + b)."""
    return resultant(psi(k), (b, a))


def norm_of_linear_direct(a: int, b: int, k: int) -> Fraction:
    """Same norm from prod(a alpha_i + b) = (-1)^k a^k psi_k(-b/a); an independent route."""
    if a == 0:
        return Fraction(b) ** k
    return (-1) ** k * Fraction(a) ** k * psi(k)(Fraction(-b, a))


def norm_of_fk(k: int) -> Fraction:
    """N(f_k(alpha)) = N(alpha - 1) / N((k+1) alpha - 2k)."""
    return norm_of_linear(1, -1, k) / norm_of_linear(k + 1, -2 * k, k)


def norm_of_fk_closed_form(k: int) -> Fraction:
    return Fraction((k - 1) ** 2, 2 ** (k + 1) * k ** k - (k + 1) ** (k + 1))


def norm_of_product(k: int) -> Fraction:
    """N((2 alpha - 1) f_k(alpha))."""
    return norm_of_linear(2, -1, k) * norm_of_fk(k)


def verify_ggl(k_max: int) -> list[int]:
    """All k in [2, k_max] with 2^(k+1) - 3 == (2^(k+1) k^k - (k+1)^(k+1)) / (k-1)^2."""
    if k_max < 2:
        raise ValueError("k_max must be >= 2")
    out = []
    for k in range(2, k_max + 1):
        lhs = Fraction(2 ** (k + 1) - 3)
        rhs = Fraction(2 ** (k + 1) * k ** k - (k + 1) ** (k + 1), (k - 1) ** 2)
        if lhs == rhs:
            out.append(k)
    return out


def mobius_minpoly(p: IntPolynomial, a: int, b: int, c: int, d: int) -> IntPolynomial:
    """Primitive polynomial of (a x + b)/(c x + d) where x runs over the roots of p.

    This is Res_x(p(x), (c x + d) y - (a x + b)) up to a constant: substitute
    x = (d y - b)/(a - c y) and clear denominators.
    """
    if a * d - b * c == 0:
        raise ValueError("degenerate Mobius map")
    k = p.degree
    num = IntPolynomial((-b, d))       # d y - b
    den = IntPolynomial((a, -c))       # a - c y
    out = IntPolynomial((0,))
    num_pows = [IntPolynomial((1,))]
    den_pows = [IntPolynomial((1,))]
    for _ in range(k):
        num_pows.append(num_pows[-1] * num)
        den_pows.append(den_pows[-1] * den)
    for i, coeff in enumerate(p.coeffs):
        if coeff:
            out = out + (num_pows[i] * den_pows[k - i]) * coeff
    return out.primitive()


def minpoly_of_fk(k: int) -> IntPolynomial:
    # f_k(x) = (x - 1) / ((k + 1) x - 2k)
    return mobius_minpoly(psi(k), 1, -1, k + 1, -2 * k)


def minpoly_of_linear(a: int, b: int, k: int) -> IntPolynomial:
    return mobius_minpoly(psi(k), a, b, 0, 1)


# ---------------------------------------------------------------------------
# complex roots and heights
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootDisk:
    """Closed disk |z - (re + i im)| <= radius containing exactly one root."""

    re: Fraction
    im: Fraction
    radius: Fraction

    def modulus(self, bits: int = 96) -> Interval:
        centre = iv.sqrt(self.re ** 2 + self.im ** 2, bits)
        lo = max(centre.lo - self.radius, Fraction(0))
        return Interval(lo, centre.hi + self.radius)


def _mpf_to_fraction(x) -> Fraction:
    sign, man, exp, _ = x._mpf_
    man = -int(man) if sign else int(man)
    return Fraction(man * 2 ** exp) if exp >= 0 else Fraction(man, 2 ** (-exp))


def _gauss_eval(coeffs: Sequence[int], re: int, im: int, bits: int) -> tuple[int, int]:
    """p(z) * 2**(bits*deg) for z = (re + i*im) / 2**bits, in exact integers."""
    ar, ai = 0, 0
    shift = 0
    for c in reversed(coeffs):
        ar, ai = ar * re - ai * im + (c << shift), ar * im + ai * re
        shift += bits
    return ar, ai


def _sqrt_up(q: Fraction, bits: int) -> Fraction:
    return iv.sqrt(q, bits).hi


def certified_root_disks(poly: IntPolynomial, digits: int | None = None,
                         seeds=None) -> list[RootDisk]:
    """Disjoint disks each holding exactly one root of a squarefree polynomial.

    Approximations come from mpmath; each disk uses the inclusion radius
    deg * |p(z)| / |p'(z)| evaluated in exact Gaussian-rational arithmetic,
    and pairwise disjointness proves there is one root per disk.
    """
    d = poly.degree
    if d < 1:
        return []
    size = max(len(str(abs(c))) for c in poly.coeffs)
    digits = digits or 20 + size + d // 2
    dp = poly.derivative()
    if seeds is None:
        seeds = _float_seeds(poly)
    for attempt in range(6):
        with mpmath.workdps(digits):
            approx = _polish(poly, dp, seeds, digits) if seeds is not None and attempt < 2 else None
            if approx is None:
                approx = mpmath.polyroots([mpmath.mpf(c) for c in reversed(poly.coeffs)],
                                          maxsteps=200 + 20 * d, extraprec=digits,
                                          error=False)
        bits = int(digits * 3.33)
        disks = []
        ok = True
        for z in approx:
            re = iv.round_down(_mpf_to_fraction(z.real), bits)
            im = iv.round_down(_mpf_to_fraction(z.imag), bits) if isinstance(z, mpmath.mpc) else Fraction(0)
            scale = 1 << bits
            zr, zi = int(re * scale), int(im * scale)
            pr, pi = _gauss_eval(poly.coeffs, zr, zi, bits)
            qr, qi = _gauss_eval(dp.coeffs, zr, zi, bits)
            den = qr * qr + qi * qi
            if den == 0:
                ok = False
                break
            # |p/p'|**2 with the scalings 2**(bits*d) and 2**(bits*(d-1)) removed
            r2 = Fraction(d * d * (pr * pr + pi * pi), den << (2 * bits))
            disks.append(RootDisk(re, im, _sqrt_up(r2, bits) if r2 else Fraction(0)))
        if ok and _pairwise_disjoint(disks):
            return disks
        digits *= 2
    raise PrecisionError(f"could not isolate the roots of a degree-{d} polynomial")


def _float_seeds(poly: IntPolynomial):
    """Double-precision root approximations, or None if numpy cannot produce them."""
    try:
        with np.errstate(all="raise"):
            coeffs = np.array([float(c) for c in reversed(poly.coeffs)])
            roots = np.roots(coeffs)
    except (OverflowError, FloatingPointError, np.linalg.LinAlgError):
        return None
    if len(roots) != poly.degree or not np.all(np.isfinite(roots)):
        return None
    return roots


def _polish(poly: IntPolynomial, dp: IntPolynomial, seeds, digits: int):
    """Newton-refine float seeds at the current mpmath precision."""
    hi = [mpmath.mpf(c) for c in reversed(poly.coeffs)]
    dhi = [mpmath.mpf(c) for c in reversed(dp.coeffs)]
    tol = mpmath.mpf(10) ** (-digits + 5)
    out = []
    for s in seeds:
        z = mpmath.mpc(float(s.real), float(s.imag))
        prev = None
        for _ in range(8 + 2 * digits.bit_length()):
            step = mpmath.polyval(hi, z) / mpmath.polyval(dhi, z)
            abs_step = abs(step)
            if prev is not None and abs_step >= prev / 2 and abs_step < 1e-12:
                break  # quadratic convergence has stalled at precision noise
            z -= step
            if abs_step <= tol * max(1, abs(z)):
                break
            prev = abs_step
        else:
            return None
        out.append(z)
    return out


def _pairwise_disjoint(disks: list[RootDisk]) -> bool:
    for i in range(len(disks)):
        for j in range(i + 1, len(disks)):
            a, b = disks[i], disks[j]
            dist2 = (a.re - b.re) ** 2 + (a.im - b.im) ** 2
            if dist2 <= (a.radius + b.radius) ** 2:
                return False
    return True


def _split_dominant(k: int, disks: list[RootDisk]) -> tuple[RootDisk, list[RootDisk]]:
    alpha = alpha_interval(k, 64).mid
    idx = min(range(len(disks)), key=lambda i: (disks[i].re - alpha) ** 2 + disks[i].im ** 2)
    dom = disks[idx]
    if not dom.modulus().lo > 1:
        raise PrecisionError("could not separate the dominant root disk")
    return dom, disks[:idx] + disks[idx + 1:]


def conjugate_moduli(k: int) -> list[Interval]:
    """Certified moduli of the k-1 roots of psi_k other than alpha(k)."""
    _, rest = _split_dominant(k, certified_root_disks(psi(k)))
    return [disk.modulus() for disk in rest]


def fk_conjugate_moduli(k: int) -> list[Interval]:
    """Enclosures of |f_k(alpha_i)| over the non-dominant roots alpha_i."""
    _, rest = _split_dominant(k, certified_root_disks(psi(k)))
    out = []
    for disk in rest:
        num = RootDisk(disk.re - 1, disk.im, disk.radius).modulus()
        den = RootDisk((k + 1) * disk.re - 2 * k, (k + 1) * disk.im, (k + 1) * disk.radius).modulus()
        if den.lo <= 0:
            raise PrecisionError("denominator of f_k not separated from 0")
        out.append(Interval(num.lo / den.hi, num.hi / den.lo))
    return out


def log_height(value, bits: int = 96, seeds=None) -> Interval:
    """Logarithmic (Weil) height.

    ``value`` may be an int/Fraction (h = log max(|p|, q)), an
    :class:`IntPolynomial` taken as the minimal polynomial of the number, or
    a :class:`RealAlgebraic` (its minimal polynomial is used).  ``seeds``
    are optional complex root approximations for the polynomial case.
    """
    if isinstance(value, RealAlgebraic):
        value = value.minpoly
    if isinstance(value, IntPolynomial):
        poly = value.primitive()
        if poly.degree == 0:
            raise ValueError("constant polynomial has no root")
        if poly.degree == 1:
            return log_height(Fraction(-poly.coeffs[0], poly.coeffs[1]), bits)
        total = iv.log_rational(poly.leading, bits)
        for disk in certified_root_disks(poly, seeds=seeds):
            m = disk.modulus(bits)
            if m.hi <= 1:
                continue
            lo = iv.log_rational(m.lo, bits).lo if m.lo > 1 else Fraction(0)
            total = total + Interval(lo, iv.log_rational(m.hi, bits).hi)
        return total / poly.degree
    q = Fraction(value)
    if q == 0:
        raise ValueError("height of 0 is undefined")
    return iv.log_rational(max(abs(q.numerator), q.denominator), bits)


def fk_log_height(k: int, bits: int = 96) -> Interval:
    """h(f_k(alpha)), seeding the root search with the images of the roots of psi_k.

    The minimal polynomial of f_k(alpha) has a wide coefficient range, so
    float roots of it are poor starting points; the Mobius images of the
    (well conditioned) roots of psi_k are accurate ones.
    """
    roots = _float_seeds(psi(k))
    seeds = None if roots is None else (roots - 1) / ((k + 1) * roots - 2 * k)
    return log_height(minpoly_of_fk(k), bits, seeds=seeds)
