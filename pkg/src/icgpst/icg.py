"""Integral circulant graphs ICG_n(D): construction, adjacency, exact spectra.

Vertices are the integers 0..n-1. Two vertices a, b are adjacent when
gcd(a - b, n) lies in the divisor set D. Spectra are kept in DFT index order
(lambda_j belongs to the character j of Z_n) and are never sorted.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

import numpy as np

from . import numtheory as nt

MAX_ORDER = 2**31
UNREACHABLE = None


class DivisorSetError(ValueError):
    """Raised for a divisor set that does not define an ICG."""


@dataclass(frozen=True)
class DivisorSet:
    n: int
    divisors: tuple[int, ...]

    def __post_init__(self):
        n = self.n
        if not 2 <= n < MAX_ORDER:
            raise DivisorSetError(f"order must satisfy 2 <= n < 2^31, got {n}")
        if not self.divisors:
            raise DivisorSetError("divisor set is empty")
        for d in self.divisors:
            if d < 1 or d >= n:
                raise DivisorSetError(f"{d} not a proper divisor of {n}")
            if n % d:
                raise DivisorSetError(f"{d} does not divide {n}")
        if any(a >= b for a, b in zip(self.divisors, self.divisors[1:])):
            raise DivisorSetError("divisors must be strictly ascending")

    def __contains__(self, d: object) -> bool:
        return d in self.divisors

    def __iter__(self):
        return iter(self.divisors)

    def __len__(self) -> int:
        return len(self.divisors)

    def __str__(self) -> str:
        return f"ICG_{self.n}({{{','.join(map(str, self.divisors))}}})"


def make_divisor_set(n: int, divisors: Iterable[int]) -> DivisorSet:
    """Validate, sort and deduplicate ``divisors`` into a DivisorSet of order n."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise DivisorSetError(f"order must be an integer, got {n!r}")
    ds = sorted(set(int(d) for d in divisors))
    return DivisorSet(n, tuple(ds))


@dataclass(frozen=True)
class IntegerSpectrum:
    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.n:
            raise ValueError(f"spectrum of order {self.n} has {len(self.values)} values")

    def __getitem__(self, j: int) -> int:
        return self.values[j]

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class IcgGraph:
    divisor_set: DivisorSet
    symbol: tuple[int, ...]
    degree: int
    connected: bool

    @property
    def n(self) -> int:
        return self.divisor_set.n

    @property
    def divisors(self) -> tuple[int, ...]:
        return self.divisor_set.divisors


@dataclass(frozen=True)
class DivisorPartition:
    """Classes D_i = {d in D : v2(n/d) = i} and the derived sets."""

    d0: frozenset[int]
    d1: frozenset[int]
    d2: frozenset[int]
    d3tilde: frozenset[int]
    d1tilde: frozenset[int] = field(init=False)
    d1star: frozenset[int]
    d2star: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "d1tilde", self.d0 | self.d1)


@dataclass(frozen=True)
class NonIntegral:
    """Witness that a symbol set is not a union of gcd classes."""

    element: int
    gcd_class: frozenset[int]
    missing: frozenset[int]


def gn_class(n: int, d: int) -> frozenset[int]:
    """G_n(d) = {k : gcd(k, n) = d, 1 <= k <= n-1}."""
    if d < 1 or d >= n or n % d:
        raise DivisorSetError(f"{d} not a proper divisor of {n}")
    return frozenset(k for k in range(d, n, d) if math.gcd(k, n) == d)


def build_graph(ds: DivisorSet) -> IcgGraph:
    n = ds.n
    dset = set(ds.divisors)
    symbol = tuple(k for k in range(1, n) if math.gcd(k, n) in dset)
    degree = len(symbol)
    expected = sum(nt.euler_phi(n // d) for d in dset)
    if degree != expected:
        raise AssertionError(f"{ds}: |symbol|={degree} but totient degree is {expected}")
    connected = math.gcd(n, *ds.divisors) == 1
    return IcgGraph(ds, symbol, degree, connected)


def adjacent(g: IcgGraph, a: int, b: int) -> bool:
    n = g.n
    for v in (a, b):
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} outside 0..{n - 1}")
    if a == b:
        return False
    return math.gcd((a - b) % n, n) in g.divisor_set


@lru_cache(maxsize=4096)
def ramanujan_column(n: int, d: int) -> tuple[int, ...]:
    """(c(j, n/d))_{j=0..n-1}: the contribution of divisor d to the spectrum."""
    m = n // d
    base = [nt.ramanujan(j, m) for j in range(m)]
    # c(j, m) only depends on j mod m
    return tuple(base[j % m] for j in range(n))


def spectrum_exact(g: IcgGraph | DivisorSet) -> IntegerSpectrum:
    """lambda_j = sum_{d in D} c(j, n/d) for j = 0..n-1, in DFT order."""
    ds = g.divisor_set if isinstance(g, IcgGraph) else g
    n = ds.n
    total = np.zeros(n, dtype=np.int64)
    for d in ds.divisors:
        total += np.asarray(ramanujan_column(n, d), dtype=np.int64)
    return IntegerSpectrum(n, tuple(int(v) for v in total))


def spectrum_oracle(g: IcgGraph) -> IntegerSpectrum:
    """lambda_j = sum_{s in S} omega_n^(j s) evaluated in complex doubles."""
    n = g.n
    js = np.arange(n, dtype=np.int64)
    ss = np.asarray(g.symbol, dtype=np.int64)
    exps = np.outer(js, ss) % n
    sums = np.exp(2j * np.pi * exps / n).sum(axis=1)
    rounded = np.rint(sums.real)
    residual = np.abs(sums - rounded)
    if residual.size and residual.max() >= nt.ORACLE_RESIDUAL:
        j = int(np.argmax(residual))
        raise nt.OracleResidualError(
            f"{g.divisor_set}: lambda_{j} = {sums[j]!r} is not an integer"
        )
    return IntegerSpectrum(n, tuple(int(v) for v in rounded))


def partition_divisors(ds: DivisorSet) -> DivisorPartition:
    n = ds.n
    classes: dict[int, set[int]] = {}
    for d in ds.divisors:
        classes.setdefault(nt.valuation(2, n // d), set()).add(d)
    d1 = frozenset(classes.get(1, ()))
    d2 = frozenset(classes.get(2, ()))
    d3 = frozenset(d for i, s in classes.items() if i >= 3 for d in s)
    half = {n // 2} if n % 2 == 0 else set()
    quarter = {n // 4} if n % 4 == 0 else set()
    return DivisorPartition(
        d0=frozenset(classes.get(0, ())),
        d1=d1,
        d2=d2,
        d3tilde=d3,
        d1star=d1 - half,
        d2star=d2 - quarter,
    )


def integrality_check(n: int, symbol: Iterable[int]) -> DivisorSet | NonIntegral:
    """Recover D from a circulant symbol, or return a witness that none exists.

    The symbol must be a subset of 1..n-1 closed under k -> n - k.
    """
    sym = set(symbol)
    for s in sym:
        if not 1 <= s < n:
            raise ValueError(f"symbol element {s} outside 1..{n - 1}")
        if n - s not in sym:
            raise ValueError(f"symbol is not symmetric: {s} present, {n - s} missing")
    by_gcd: dict[int, set[int]] = {}
    for s in sym:
        by_gcd.setdefault(math.gcd(s, n), set()).add(s)
    for d in sorted(by_gcd):
        members = by_gcd[d]
        # |G_n(d)| = phi(n/d), so a short class is incomplete
        if len(members) != nt.euler_phi(n // d):
            cls = gn_class(n, d)
            return NonIntegral(min(members), cls, frozenset(cls - members))
    return make_divisor_set(n, by_gcd)


def graph_distance(g: IcgGraph, a: int, b: int) -> int | None:
    """Breadth-first distance from a to b; ``UNREACHABLE`` (None) across components."""
    n = g.n
    for v in (a, b):
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} outside 0..{n - 1}")
    dist = {a: 0}
    queue = deque([a])
    while queue:
        v = queue.popleft()
        if v == b:
            return dist[v]
        for s in g.symbol:
            w = (v + s) % n
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return None
