"""Multiplicative dependence of pairs of positive integers, and searches over Lucas pairs.

Two integers a, b >= 2 are multiplicatively dependent exactly when they are
powers of the same integer, i.e. when their primitive bases coincide.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable

import gmpy2

from .sequences import SequenceParams, table_for


@dataclass(frozen=True)
class DependenceVerdict:
    """``exponents`` is a nonzero (x, y) with a**x * b**y == 1 when dependent."""

    dependent: bool
    exponents: tuple | None = None
    base: int | None = None
    s: int | None = None  # a = base**s
    t: int | None = None  # b = base**t

    def __bool__(self) -> bool:
        return self.dependent

    def witness_json(self) -> dict | None:
        if not self.dependent:
            return None
        if self.base is None:
            return {"x": self.exponents[0], "y": self.exponents[1]}
        return {"base": str(self.base), "s": self.s, "t": self.t}


def _primes_upto(n: int) -> list[int]:
    out, p = [], 2
    while p <= n:
        out.append(p)
        p = int(gmpy2.next_prime(p))
    return out


def primitive_base(a: int) -> tuple[int, int]:
    """(c, e) with a = c**e and c not a perfect power."""
    if a < 2:
        raise ValueError("primitive_base needs a >= 2")
    base, exponent = gmpy2.mpz(a), 1
    while gmpy2.is_power(base):
        for p in _primes_upto(base.bit_length()):
            root, exact = gmpy2.iroot(base, p)
            if exact:
                base, exponent = root, exponent * p
                break
        else:  # pragma: no cover - is_power and iroot disagree
            raise AssertionError("is_power reported a power but no root was found")
    return int(base), exponent


def mdep_test(a: int, b: int) -> DependenceVerdict:
    if a < 1 or b < 1:
        raise ValueError("inputs must be positive")
    if a == 1:
        return DependenceVerdict(True, (1, 0))
    if b == 1:
        return DependenceVerdict(True, (0, 1))
    ca, s = primitive_base(a)
    cb, t = primitive_base(b)
    if ca != cb:
        return DependenceVerdict(False)
    g = math.gcd(s, t)
    # a**(t/g) == b**(s/g), so a**(t/g) * b**(-s/g) == 1
    return DependenceVerdict(True, (t // g, -(s // g)), ca, s, t)


def gcd_power_filter(k: int, n: int, m: int, kind="lucas") -> bool:
    """Necessary condition for dependence of L_n, L_m when n > m >= 2."""
    if not n > m >= 2:
        raise ValueError("the filter is stated for n > m >= 2")
    table = table_for(SequenceParams(k, kind))
    ln, lm = table[n], table[m]
    g = math.gcd(ln, lm)
    return pow(g, n, ln) == 0 and pow(g, m, lm) == 0


@dataclass(frozen=True)
class SearchWindow:
    k_range: tuple
    n_max: int
    m_min: int = 0

    def __post_init__(self):
        lo, hi = self.k_range
        object.__setattr__(self, "k_range", (int(lo), int(hi)))
        if lo < 2 or hi < lo:
            raise ValueError("k range must lie in [2, inf) and be non-empty")
        if self.n_max < 2:
            raise ValueError("n_max must be >= 2")
        if self.m_min < 0:
            raise ValueError("m_min must be >= 0")

    def ks(self) -> range:
        return range(self.k_range[0], self.k_range[1] + 1)

    def indices(self) -> list[int]:
        """Admissible indices 0..n_max with 1 removed."""
        return [i for i in range(self.n_max + 1) if i != 1]

    def to_json(self) -> dict:
        return {"k_range": list(self.k_range), "n_max": self.n_max, "m_min": self.m_min,
                "exclusions": {"n": 1, "m": 1}}


@dataclass(frozen=True)
class SearchHit:
    k: int
    m: int
    n: int
    verdict: DependenceVerdict

    def to_json(self) -> dict:
        return {"k": self.k, "m": self.m, "n": self.n, "witness": self.verdict.witness_json()}


def _confirm(k: int, m: int, n: int, lm: int, ln: int) -> DependenceVerdict | None:
    if m >= 2 and not gcd_power_filter(k, n, m):
        return None
    verdict = mdep_test(ln, lm)
    return verdict if verdict.dependent else None


def search_k(k: int, n_max: int, m_min: int = 0, method: str = "grouped") -> list[SearchHit]:
    """All dependent pairs (m, n) for one k, n > m >= m_min, n, m != 1, n <= n_max."""
    table = table_for(SequenceParams(k))
    table.extend_to(n_max)
    idx = [i for i in range(max(m_min, 0), n_max + 1) if i != 1]
    hits: list[SearchHit] = []
    if method == "pairwise":
        for pos, n in enumerate(idx):
            ln = table[n]
            for m in idx[:pos]:
                lm = table[m]
                if math.gcd(ln, lm) == 1:
                    continue
                verdict = _confirm(k, m, n, lm, ln)
                if verdict:
                    hits.append(SearchHit(k, m, n, verdict))
    elif method == "grouped":
        # every L_i here is >= 2; dependence means equal primitive bases
        groups: dict[int, list[int]] = defaultdict(list)
        for i in idx:
            groups[primitive_base(table[i])[0]].append(i)
        for members in groups.values():
            for pos, n in enumerate(members):
                for m in members[:pos]:
                    verdict = _confirm(k, m, n, table[m], table[n])
                    if verdict is None:
                        raise AssertionError(f"grouped pair (k={k}, m={m}, n={n}) not confirmed")
                    hits.append(SearchHit(k, m, n, verdict))
    else:
        raise ValueError(f"unknown search method {method!r}")
    hits.sort(key=lambda h: (h.k, h.n, h.m))
    return hits


def search(window: SearchWindow, method: str = "grouped") -> list[SearchHit]:
    """Ascending (k, n, m) list of dependent pairs in the window."""
    out: list[SearchHit] = []
    for k in window.ks():
        out.extend(search_k(k, window.n_max, window.m_min, method))
    return out


def brute_force_dependent(a: int, b: int, max_exp: int = 10) -> bool:
    """Reference check: a**x == b**y for some 1 <= x, y <= max_exp, or a 1 among the inputs."""
    if a == 1 or b == 1:
        return True
    return any(a ** x == b ** y for x in range(1, max_exp + 1) for y in range(1, max_exp + 1))


def triples(hits: Iterable[SearchHit]) -> list[tuple[int, int, int]]:
    return [(h.k, h.m, h.n) for h in hits]
