"""Exact integer arithmetic: totient, Moebius, divisors, p-adic valuation and
Ramanujan sums.

Everything here is a pure function of plain ints. Factorisation is trial
division, which is plenty for the desk-scale orders this package targets.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

INFINITY = math.inf

#: Rounding residual above which a floating root-of-unity sum is rejected.
ORACLE_RESIDUAL = 1e-6


class OracleResidualError(ArithmeticError):
    """A complex root-of-unity sum did not land on an integer."""


def gcd(a: int, b: int) -> int:
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorisation of n as ((p, e), ...) with p ascending."""
    if n < 1:
        raise ValueError(f"cannot factorise {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_prime(p: int) -> bool:
    return p >= 2 and factorize(p) == ((p, 1),)


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"euler_phi needs n >= 1, got {n}")
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError(f"mobius needs n >= 1, got {n}")
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def divisor_count(n: int) -> int:
    if n < 1:
        raise ValueError(f"divisor_count needs n >= 1, got {n}")
    return math.prod(e + 1 for _, e in factorize(n))


def proper_divisors(n: int) -> list[int]:
    """Divisors d of n with 1 <= d < n, ascending."""
    if n < 2:
        raise ValueError(f"proper_divisors needs n >= 2, got {n}")
    return divisors(n)[:-1]


def valuation(p: int, n: int) -> int | float:
    """Exponent of the prime p in n; ``INFINITY`` when n == 0.

    Negative n is accepted and treated as |n|, so the valuation of a signed
    eigenvalue difference can be taken directly.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n == 0:
        return INFINITY
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def ramanujan(j: int, n: int) -> int:
    """Ramanujan sum c(j, n) = mu(t) phi(n) / phi(t), t = n / gcd(n, j)."""
    if n < 1:
        raise ValueError(f"ramanujan needs n >= 1, got {n}")
    t = n // math.gcd(n, j % n)
    return mobius(t) * (euler_phi(n) // euler_phi(t))


def _root_sums(js: np.ndarray, n: int) -> list[int]:
    ks = np.array([k for k in range(1, n + 1) if math.gcd(k, n) == 1], dtype=np.int64)
    # reduce exponents exactly before going to floating point
    exps = np.outer(js % n, ks) % n
    sums = np.exp(2j * np.pi * exps / n).sum(axis=1)
    rounded = np.rint(sums.real)
    residual = np.abs(sums - rounded)
    worst = int(np.argmax(residual))
    if residual[worst] >= ORACLE_RESIDUAL:
        raise OracleResidualError(
            f"c({int(js[worst])}, {n}) root-of-unity sum {sums[worst]!r} is not an integer"
        )
    return [int(v) for v in rounded]


def ramanujan_oracle(j: int, n: int) -> int:
    """c(j, n) as the sum of omega_n^(j k) over k coprime to n, rounded.

    Raises OracleResidualError if the sum misses an integer by
    ``ORACLE_RESIDUAL`` or more.
    """
    if n < 1:
        raise ValueError(f"ramanujan needs n >= 1, got {n}")
    return _root_sums(np.array([j], dtype=np.int64), n)[0]


def ramanujan_oracle_row(n: int) -> list[int]:
    """``ramanujan_oracle(j, n)`` for every j in 0..n-1 in one vectorised pass."""
    if n < 1:
        raise ValueError(f"ramanujan needs n >= 1, got {n}")
    return _root_sums(np.arange(n, dtype=np.int64), n)
