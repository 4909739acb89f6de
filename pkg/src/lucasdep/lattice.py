"""Exact LLL reduction and de Weger-style lower bounds for linear forms.

The reduction is the all-integer variant of LLL with parameter 3/4: the
Gram-Schmidt data is kept as the integers d_i = prod ||b*_j||^2 (j <= i) and
lambda_ij = d_j * mu_ij, so no rational arithmetic is needed inside the loop.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import intervals as iv
from .intervals import Interval, PrecisionError

log = logging.getLogger(__name__)

Vector = list[int]


class DependentColumnsError(ValueError):
    """The supplied columns are linearly dependent."""


class EnlargeC(ArithmeticError):
    """delta**2 < T**2 + S: the approximation constant C has to grow."""

    def __init__(self, message: str, suggested_C: int):
        super().__init__(message)
        self.suggested_C = suggested_C


def _dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def determinant(columns: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant (fraction-free Bareiss elimination)."""
    n = len(columns)
    a = [[columns[j][i] for j in range(n)] for i in range(n)]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


@dataclass(frozen=True)
class LatticeBasis:
    """Square integer basis; ``columns[j]`` is the j-th basis vector."""

    dim: int
    columns: tuple

    def __post_init__(self):
        cols = tuple(tuple(int(x) for x in c) for c in self.columns)
        object.__setattr__(self, "columns", cols)
        if len(cols) != self.dim or any(len(c) != self.dim for c in cols):
            raise ValueError(f"expected a {self.dim}x{self.dim} basis")

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "LatticeBasis":
        return cls(len(columns), tuple(columns))

    def determinant(self) -> int:
        return determinant(self.columns)

    def to_json(self) -> dict:
        return {"dim": self.dim, "columns": [[str(x) for x in c] for c in self.columns]}

    @classmethod
    def from_json(cls, doc: dict) -> "LatticeBasis":
        return cls(int(doc["dim"]), tuple(tuple(int(x) for x in c) for c in doc["columns"]))


@dataclass(frozen=True)
class GramSchmidtData:
    bstar: tuple  # rational vectors
    mu: tuple     # mu[i][j] for j < i

    @property
    def norms_sq(self) -> list[Fraction]:
        return [_dot(b, b) for b in self.bstar]


def gram_schmidt(columns: Sequence[Sequence[int]]) -> GramSchmidtData:
    """Exact rational Gram-Schmidt orthogonalisation."""
    bstar: list[list[Fraction]] = []
    norms: list[Fraction] = []
    mu: list[list[Fraction]] = []
    for b in columns:
        v = [Fraction(x) for x in b]
        row = []
        for j, bs in enumerate(bstar):
            if norms[j] == 0:
                raise DependentColumnsError("columns are linearly dependent")
            m = _dot(b, bs) / norms[j]
            row.append(m)
            v = [x - m * y for x, y in zip(v, bs)]
        bstar.append(v)
        norms.append(_dot(v, v))
        mu.append(row)
    if norms and norms[-1] == 0:
        raise DependentColumnsError("columns are linearly dependent")
    return GramSchmidtData(tuple(tuple(v) for v in bstar), tuple(tuple(r) for r in mu))


@dataclass(frozen=True)
class ReducedBasis:
    basis: LatticeBasis
    gs: GramSchmidtData
    d: tuple  # d[i] = prod_{j<=i} ||b*_j||^2, with d[0] = 1 prepended
    swaps: int = 0

    def bstar_norm_sq(self, j: int) -> Fraction:
        """||b*_j||^2 for 0-based j."""
        return Fraction(self.d[j + 1], self.d[j])


def is_lll_reduced(gs: GramSchmidtData, y: Fraction = Fraction(3, 4)) -> bool:
    """Size condition |mu_ij| <= 1/2 and the Lovasz condition with parameter y."""
    norms = gs.norms_sq
    for i, row in enumerate(gs.mu):
        if any(abs(m) > Fraction(1, 2) for m in row):
            return False
        if i and norms[i] + row[i - 1] ** 2 * norms[i - 1] < y * norms[i - 1]:
            return False
    return True


def lll_reduce(basis: LatticeBasis | Sequence[Sequence[int]]) -> ReducedBasis:
    """Integral LLL with parameter 3/4; deterministic (lowest index first)."""
    if not isinstance(basis, LatticeBasis):
        basis = LatticeBasis.from_columns(basis)
    n = basis.dim
    b = [list(c) for c in basis.columns]
    if n == 0:
        return ReducedBasis(basis, GramSchmidtData((), ()), (1,))
    d = [0] * (n + 1)  # d[i+1] is d_i of the 1-based description
    d[0] = 1
    lam = [[0] * n for _ in range(n)]
    d[1] = _dot(b[0], b[0])
    if d[1] == 0:
        raise DependentColumnsError("zero column")
    k, kmax, swaps = 1, 0, 0

    def redi(k: int, l: int) -> None:
        if 2 * abs(lam[k][l]) > d[l + 1]:
            q = (2 * lam[k][l] + d[l + 1]) // (2 * d[l + 1])  # nearest integer
            bk, bl = b[k], b[l]
            for i in range(n):
                bk[i] -= q * bl[i]
            lam[k][l] -= q * d[l + 1]
            for i in range(l):
                lam[k][i] -= q * lam[l][i]

    def swapi(k: int) -> None:
        b[k], b[k - 1] = b[k - 1], b[k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        lm = lam[k][k - 1]
        B = (d[k - 1] * d[k + 1] + lm * lm) // d[k]
        for i in range(k + 1, kmax + 1):
            t = lam[i][k]
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - lm * t) // d[k]
            lam[i][k - 1] = (B * t + lm * lam[i][k]) // d[k + 1]
        d[k] = B

    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k + 1):
                u = _dot(b[k], b[j])
                for i in range(j):
                    u = (d[i + 1] * u - lam[k][i] * lam[j][i]) // d[i]
                if j < k:
                    lam[k][j] = u
                else:
                    d[k + 1] = u
            if d[k + 1] == 0:
                raise DependentColumnsError("columns are linearly dependent")
        redi(k, k - 1)
        lm = lam[k][k - 1]
        if 4 * d[k + 1] * d[k - 1] < 3 * d[k] * d[k] - 4 * lm * lm:
            swapi(k)
            swaps += 1
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                redi(k, l)
            k += 1
    out = LatticeBasis(n, tuple(tuple(c) for c in b))
    return ReducedBasis(out, gram_schmidt(out.columns), tuple(d), swaps)


# ---------------------------------------------------------------------------
# de Weger bounds
# ---------------------------------------------------------------------------

def solve(columns: Sequence[Sequence[int]], y: Sequence) -> list[Fraction]:
    """Exact solution z of B z = y, B given by its columns."""
    n = len(columns)
    a = [[Fraction(columns[j][i]) for j in range(n)] + [Fraction(y[i])] for i in range(n)]
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            raise DependentColumnsError("singular basis")
        a[c], a[p] = a[p], a[c]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c] / a[c][c]
                a[r] = [x - f * z for x, z in zip(a[r], a[c])]
    return [a[i][n] / a[i][i] for i in range(n)]


def _dist_to_int(q: Fraction) -> Fraction:
    return abs(q - round(q))


@dataclass(frozen=True)
class DeWegerOutcome:
    """Squared quantities are kept exactly; ``c1``/``delta`` give enclosures."""

    c1_sq: Fraction
    c1_min_sq: Fraction  # the minimum instead of the maximum, logged for comparison
    lam: Fraction
    delta_sq: Fraction
    b1_norm_sq: int
    S: Fraction | None = None
    T: Fraction | None = None
    new_bound: int | None = None

    def c1(self, bits: int = 64) -> Interval:
        return iv.sqrt(self.c1_sq, bits)

    def delta(self, bits: int = 64) -> Interval:
        return iv.sqrt(self.delta_sq, bits)

    @property
    def condition_holds(self) -> bool:
        if self.S is None or self.T is None:
            raise ValueError("S and T are not set")
        return self.delta_sq >= self.T ** 2 + self.S


def de_weger_lower_bound(reduced: ReducedBasis, y: Sequence[int] | None = None) -> DeWegerOutcome:
    """delta with l(L, y) >= delta, from c1 = max_j ||b_1|| / ||b*_j||."""
    basis = reduced.basis
    n = basis.dim
    y = [0] * n if y is None else list(y)
    if len(y) != n:
        raise ValueError("target vector has the wrong dimension")
    z = solve(basis.columns, y)
    if all(q.denominator == 1 for q in z):
        lam = Fraction(1)
    else:
        i0 = max(i for i, q in enumerate(z) if q != 0)
        lam = _dist_to_int(z[i0])
    b1 = _dot(basis.columns[0], basis.columns[0])
    norms = [reduced.bstar_norm_sq(j) for j in range(n)]
    c1_sq = max(Fraction(b1) / s for s in norms)
    c1_min_sq = min(Fraction(b1) / s for s in norms)
    delta_sq = lam * lam * b1 / c1_sq
    return DeWegerOutcome(c1_sq, c1_min_sq, lam, delta_sq, b1)


def s_and_t(X: Sequence[int]) -> tuple[Fraction, Fraction]:
    """S = sum of X_i**2 over all but the last bound, T = (1 + sum X_i) / 2."""
    S = Fraction(sum(x * x for x in X[:-1]))
    T = Fraction(1 + sum(X), 2)
    return S, T


def reduction_step(outcome: DeWegerOutcome, C: int, c3, c4, X: Sequence[int],
                   enlarge_factor: int = 10 ** 10, bits: int = 128) -> DeWegerOutcome:
    """Turn a delta into an upper bound on H where |Lambda| <= c3 exp(-c4 H).

    Returns a copy of ``outcome`` with S, T and ``new_bound`` filled in.  When
    delta**2 <= T**2 + S the bound is undefined and :class:`EnlargeC` is raised.
    """
    S, T = s_and_t(X)
    out = DeWegerOutcome(outcome.c1_sq, outcome.c1_min_sq, outcome.lam, outcome.delta_sq,
                         outcome.b1_norm_sq, S, T)
    gap = outcome.delta_sq - S
    if gap <= T * T:
        raise EnlargeC(f"delta^2 < T^2 + S (log10 C = {len(str(C)) - 1})", C * enlarge_factor)
    c3, c4 = iv.to_interval(c3), iv.to_interval(c4)
    root = iv.sqrt(gap, bits) - T
    if root.lo <= 0:
        # the gap is positive but too close to T**2 for this working precision
        root = iv.sqrt(gap, 4 * bits + 2 * gap.numerator.bit_length()) - T
    if root.lo <= 0:
        raise EnlargeC("sqrt(delta^2 - S) - T not separated from 0", C * enlarge_factor)
    num = iv.log(c3 * C, bits) - iv.log(Interval(root.lo, root.lo), bits)
    H = num / c4
    bound = math.floor(H.hi)
    return DeWegerOutcome(out.c1_sq, out.c1_min_sq, out.lam, out.delta_sq, out.b1_norm_sq,
                          S, T, bound)


def build_approx_lattice(etas: Sequence[Interval], C: int) -> LatticeBasis:
    """Identity rows above the row of floor(C * eta_i).

    Column j < dim-1 is e_j with floor(C eta_j) in the last row; the last
    column is (0, ..., 0, floor(C eta_last)).
    """
    n = len(etas)
    if n < 1:
        raise ValueError("need at least one eta")
    row = []
    for i, eta in enumerate(etas):
        scaled = iv.to_interval(eta) * C
        try:
            row.append(scaled.floor())
        except PrecisionError as exc:
            raise PrecisionError(f"floor(C*eta_{i + 1}) is ambiguous", None) from exc
    cols = []
    for j in range(n):
        col = [0] * n
        if j < n - 1:
            col[j] = 1
        col[n - 1] = row[j]
        cols.append(tuple(col))
    return LatticeBasis(n, tuple(cols))


@dataclass
class ReductionRun:
    """Result of one reduction with automatic growth of C."""

    C: int
    outcome: DeWegerOutcome
    enlargements: list = field(default_factory=list)

    @property
    def bound(self) -> int:
        return self.outcome.new_bound


def reduce_linear_form(etas_at: Callable[[int], Sequence[Interval]], C: int, X: Sequence[int],
                       c3, c4, enlarge_factor: int = 10, max_enlargements: int = 5) -> ReductionRun:
    """Build, reduce and bound; grow C by ``enlarge_factor`` while delta is too small.

    ``etas_at(C)`` must return enclosures tight enough to floor C * eta.
    """
    enlargements = []
    for _ in range(max_enlargements + 1):
        basis = build_approx_lattice(etas_at(C), C)
        reduced = lll_reduce(basis)
        outcome = de_weger_lower_bound(reduced)
        try:
            done = reduction_step(outcome, C, c3, c4, X, enlarge_factor)
        except EnlargeC as exc:
            log.info("enlarging C: %s", exc)
            enlargements.append(C)
            C = exc.suggested_C
            continue
        return ReductionRun(C, done, enlargements)
    raise EnlargeC(f"no usable delta after {max_enlargements} enlargements", C)
