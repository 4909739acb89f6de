"""k-generalized Lucas and Fibonacci numbers.

Terms are generated iteratively with a sliding-window sum, so extending a
table by one index costs two big-integer additions regardless of ``k``.
"""

from __future__ import annotations

import enum
import json
import os
import tempfile
import threading
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

CACHE_ENV_VAR = "LUCASDEP_CACHE_DIR"


class Kind(str, enum.Enum):
    LUCAS = "lucas"
    FIBONACCI = "fibonacci"


@dataclass(frozen=True)
class SequenceParams:
    k: int
    kind: Kind = Kind.LUCAS

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"order k must be >= 2, got {self.k}")
        object.__setattr__(self, "kind", Kind(self.kind))

    @property
    def first_index(self) -> int:
        return 2 - self.k


class LucasTable:
    """Growable table of terms for a single (k, kind).

    Indices ``2-k .. 0`` hold the initial window (zeros, then 2 for Lucas or
    0 for Fibonacci at index 0), index 1 holds 1.  Reads are safe from many
    threads once the table covers the requested index; extension takes a lock.
    """

    def __init__(self, params: SequenceParams):
        self.params = params
        k = params.k
        head = [0] * (k - 1)
        head[-1] = 2 if params.kind is Kind.LUCAS else 0
        self._terms: list[int] = head + [1]
        self._window = sum(self._terms)
        self._lock = threading.Lock()

    @property
    def k(self) -> int:
        return self.params.k

    @property
    def last_index(self) -> int:
        return self.params.first_index + len(self._terms) - 1

    def extend_to(self, n: int) -> None:
        if n <= self.last_index:
            return
        with self._lock:
            terms, k = self._terms, self.params.k
            window = self._window
            for _ in range(n - self.last_index):
                terms.append(window)
                window += window - terms[-1 - k]
            self._window = window

    def __getitem__(self, n: int) -> int:
        if n < self.params.first_index:
            raise IndexError(f"index {n} below 2-k = {self.params.first_index}")
        self.extend_to(n)
        return self._terms[n - self.params.first_index]

    def terms(self, start: int, stop: int) -> list[int]:
        """Terms for ``start <= n < stop``."""
        if start < self.params.first_index:
            raise IndexError(f"index {start} below 2-k = {self.params.first_index}")
        self.extend_to(stop - 1)
        off = self.params.first_index
        return self._terms[start - off: stop - off]

    # -- persistence ---------------------------------------------------------
    def to_json(self) -> dict:
        return {"k": self.k, "kind": self.params.kind.value,
                "terms": [str(t) for t in self._terms]}

    @classmethod
    def from_json(cls, doc: dict) -> "LucasTable":
        table = cls(SequenceParams(int(doc["k"]), Kind(doc["kind"])))
        terms = [int(t) for t in doc["terms"]]
        if terms[: len(table._terms)] != table._terms:
            raise ValueError("cached table has a wrong initial window")
        table.extend_to(table.params.first_index + len(terms) - 1)
        if table._terms != terms:
            raise ValueError("cached table violates the recurrence")
        return table

    def save(self, directory: str | os.PathLike) -> Path:
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        path = directory / f"{self.params.kind.value}_k{self.k}.json"
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(self.to_json(), fh)
        os.replace(tmp, path)
        return path

    @classmethod
    def load(cls, params: SequenceParams, directory: str | os.PathLike) -> "LucasTable | None":
        path = Path(directory) / f"{params.kind.value}_k{params.k}.json"
        if not path.exists():
            return None
        with open(path) as fh:
            return cls.from_json(json.load(fh))


_tables: dict[SequenceParams, LucasTable] = {}
_tables_lock = threading.Lock()


def cache_dir() -> Path | None:
    value = os.environ.get(CACHE_ENV_VAR)
    return Path(value) if value else None


def table_for(params: SequenceParams) -> LucasTable:
    with _tables_lock:
        table = _tables.get(params)
        if table is None:
            directory = cache_dir()
            table = LucasTable.load(params, directory) if directory else None
            table = table or LucasTable(params)
            _tables[params] = table
        return table


def lucas_term(params: SequenceParams | int, n: int) -> int:
    """L_n^(k) (or F_n^(k)); an int ``params`` means the Lucas sequence of that order."""
    if isinstance(params, int):
        params = SequenceParams(params)
    if n < params.first_index:
        raise ValueError(f"index {n} below 2-k = {params.first_index}")
    return table_for(params)[n]


def check_power_identity(params: SequenceParams | int) -> bool:
    """Check L_n = 3 * 2**(n-2) for every 2 <= n <= k."""
    if isinstance(params, int):
        params = SequenceParams(params)
    if params.kind is not Kind.LUCAS:
        raise ValueError("the power identity is stated for Lucas numbers")
    table = table_for(params)
    return all(table[n] == 3 << (n - 2) for n in range(2, params.k + 1))


def check_growth_bounds(params: SequenceParams | int, n: int, alpha_lo, alpha_hi) -> bool:
    """Check alpha**(n-1) <= L_n <= 2 * alpha**n given alpha_lo <= alpha <= alpha_hi.

    Uses the endpoint that makes each inequality hardest, in exact rational
    arithmetic, so a True answer holds for the true dominant root.
    """
    if isinstance(params, int):
        params = SequenceParams(params)
    if n < 1:
        raise ValueError("growth bounds are stated for n >= 1")
    lo, hi = Fraction(alpha_lo), Fraction(alpha_hi)
    value = lucas_term(params, n)
    return hi ** (n - 1) <= value <= 2 * lo ** n


@dataclass(frozen=True)
class SmoothResult:
    """Outcome of trial division by the primes up to a bound."""

    factors: dict
    cofactor: int

    @property
    def smooth(self) -> bool:
        return self.cofactor == 1

    def __bool__(self) -> bool:
        return self.smooth


def _primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, int(n ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p:: p] = bytearray(len(sieve[p * p:: p]))
    return [i for i, flag in enumerate(sieve) if flag]


def factor_smooth(value: int, prime_bound: int) -> SmoothResult:
    """Trial-divide ``value`` by every prime <= prime_bound.

    ``result.smooth`` tells whether the value is prime_bound-smooth; when it
    is not, ``result.cofactor`` is the part left unfactored.
    """
    if value < 1:
        raise ValueError("value must be >= 1")
    if prime_bound < 2:
        raise ValueError("prime_bound must be >= 2")
    factors: dict[int, int] = {}
    rest = value
    for p in _primes_upto(prime_bound):
        while rest % p == 0:
            rest //= p
            factors[p] = factors.get(p, 0) + 1
    if rest != 1:
        return SmoothResult(factors, rest)
    return SmoothResult(factors, 1)
