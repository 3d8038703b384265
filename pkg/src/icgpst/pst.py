"""Perfect state transfer on integral circulant graphs.

PST is decided three ways that share no code path beyond the spectrum:

* spectral: all consecutive eigenvalue differences (DFT order) share one
  2-adic valuation m, and none is zero;
* structural: D1* = 2 D2*, D0 = 4 D2*, and exactly one of n/2, n/4 is in D;
* abstract form: D = D3~ u D2' u 2D2' u 4D2' u {n/2^a}, a in {1, 2}.

A fourth, numeric check evaluates |F(pi/2)_{n/2,0}| directly. PST can only
occur between 0 and n/2, so that is the only pair considered.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from . import numtheory as nt
from .fidelity import PST_TIME, verify_pst_numeric
from .icg import (
    DivisorSet,
    IntegerSpectrum,
    build_graph,
    graph_distance,
    make_divisor_set,
    partition_divisors,
    spectrum_exact,
)

MAX_ENUM_DIVISORS = 20


class MethodDisagreement(RuntimeError):
    """The independent PST deciders returned different answers."""


class TheoremViolation(RuntimeError):
    """A PST-positive graph broke a property that the theory guarantees."""


@dataclass(frozen=True)
class PstVerdict:
    divisor_set: DivisorSet
    has_pst: bool
    pair: tuple[int, int] | None
    tau: float | None
    pqcd: int | None
    common_valuation: int | None
    spectral_result: bool
    structural_result: bool
    abstract_form_result: bool
    numeric_result: bool
    agreement: bool


def _times(k: int, ds) -> set[int]:
    return {k * d for d in ds}


def pst_spectral(spec: IntegerSpectrum) -> tuple[bool, int | None]:
    """(True, m) iff every lambda_{j+1} - lambda_j has 2-adic valuation m."""
    vals = set()
    for a, b in zip(spec.values, spec.values[1:]):
        if a == b:
            return False, None
        vals.add(nt.valuation(2, b - a))
        if len(vals) > 1:
            return False, None
    if len(vals) != 1:
        return False, None
    return True, vals.pop()


def pst_structural(ds: DivisorSet) -> bool:
    n = ds.n
    part = partition_divisors(ds)
    half = n // 2 in ds if n % 2 == 0 else False
    quarter = n // 4 in ds if n % 4 == 0 else False
    return (
        half != quarter
        and part.d1star == _times(2, part.d2star)
        and part.d0 == _times(4, part.d2star)
    )


def pst_abstract_form(ds: DivisorSet) -> bool:
    n = ds.n
    quarter = n // 4 if n % 4 == 0 else None
    d3 = {d for d in ds if (n // d) % 8 == 0}
    d2 = {d for d in ds if (n // d) % 8 == 4} - {quarter}
    parts = [d3, d2, _times(2, d2), _times(4, d2)]
    for a in (1, 2):
        if n % 2**a:
            continue
        pieces = parts + [{n // 2**a}]
        union = set().union(*pieces)
        if len(union) == sum(map(len, pieces)) and union == set(ds):
            return True
    return False


def spectral_structure_check(ds: DivisorSet, spec: IntegerSpectrum) -> bool:
    """Shape of a PST spectrum.

    With n/2 in D: odd positions are -1, even positions are 1 mod 4.
    Otherwise: odd positions are 0, even positions are 2 mod 4.
    """
    n = ds.n
    if n % 2 == 0 and n // 2 in ds:
        odd_value, even_residue = -1, 1
    else:
        odd_value, even_residue = 0, 2
    return all(
        spec[j] % 4 == even_residue if j % 2 == 0 else spec[j] == odd_value
        for j in range(n)
    )


def _pqcd(ds: DivisorSet) -> int | None:
    n = ds.n
    if n % 2 == 0 and n // 2 in ds:
        return 1
    if n % 4 == 0 and n // 4 in ds:
        return 2
    return None


def decide_pst(ds: DivisorSet) -> PstVerdict:
    """Run all deciders and cross-check them.

    Raises MethodDisagreement if the four methods disagree and
    TheoremViolation if a PST-positive graph has the wrong spectrum shape,
    valuation m != 1, or a PQCD that BFS contradicts.
    """
    spec = spectrum_exact(ds)
    spectral, m = pst_spectral(spec)
    structural = pst_structural(ds)
    abstract = pst_abstract_form(ds)
    numeric = verify_pst_numeric(spec)
    results = (spectral, structural, abstract, numeric)
    if len(set(results)) != 1:
        raise MethodDisagreement(
            f"{ds}: spectral={spectral} structural={structural} "
            f"abstract_form={abstract} numeric={numeric}"
        )
    if not spectral:
        return PstVerdict(ds, False, None, None, None, None, *results, True)

    n = ds.n
    if m != 1:
        raise TheoremViolation(f"{ds}: common valuation m={m}, expected 1")
    if not spectral_structure_check(ds, spec):
        raise TheoremViolation(f"{ds}: PST spectrum {list(spec)} has the wrong shape")
    pqcd = _pqcd(ds)
    dist = graph_distance(build_graph(ds), 0, n // 2)
    if pqcd is None or pqcd != dist:
        raise TheoremViolation(f"{ds}: pqcd={pqcd} but BFS distance is {dist}")
    return PstVerdict(ds, True, (0, n // 2), PST_TIME, pqcd, m, *results, True)


def swap_check(n: int, base=()) -> bool:
    """ICG_n(base + {n/4}) has PST iff ICG_n(base + {n/2}) has PST.

    ``base`` may be empty; it must avoid n/2 and n/4.
    """
    if n % 4:
        raise ValueError(f"swap check needs 4 | n, got n={n}")
    base = set(base.divisors if isinstance(base, DivisorSet) else base)
    if n // 2 in base or n // 4 in base:
        raise ValueError(f"base set {sorted(base)} already contains n/2 or n/4")
    with_quarter = decide_pst(make_divisor_set(n, base | {n // 4}))
    with_half = decide_pst(make_divisor_set(n, base | {n // 2}))
    return with_quarter.has_pst == with_half.has_pst


def iter_divisor_sets(n: int):
    """Every nonempty subset of the proper divisors of n, by size then lexicographically."""
    pd = nt.proper_divisors(n)
    if len(pd) > MAX_ENUM_DIVISORS:
        raise ValueError(
            f"{n} has {len(pd)} proper divisors; enumeration is limited to {MAX_ENUM_DIVISORS}"
        )
    for r in range(1, len(pd) + 1):
        for combo in combinations(pd, r):
            yield DivisorSet(n, combo)


def enumerate_pst(
    n: int, connected_only: bool = False, prescreen: bool = True
) -> list[DivisorSet]:
    """All PST-positive divisor sets of order n, in ``iter_divisor_sets`` order.

    With ``prescreen`` the cheap structural test skips sets before the full
    cross-checked decision; turn it off to run ``decide_pst`` on every subset.
    """
    out = []
    for ds in iter_divisor_sets(n):
        if connected_only and math.gcd(n, *ds.divisors) != 1:
            continue
        if prescreen and not pst_structural(ds):
            continue
        if decide_pst(ds).has_pst:
            out.append(ds)
    return out


def count_formula_setbased(n: int) -> int:
    """2^(1 + |A| + |B|) with A = {d : 8 | n/d}, B = {d : n/d = 4 mod 8} minus n/4.

    Zero unless 4 | n. Equals 2^(tau(n/2^v2(n)) + [8 | n] tau(n/8)).
    """
    if n % 4:
        return 0
    pd = nt.proper_divisors(n)
    a = sum(1 for d in pd if (n // d) % 8 == 0)
    b = sum(1 for d in pd if (n // d) % 8 == 4 and d != n // 4)
    return 2 ** (1 + a + b)


def count_formula_printed(n: int) -> int:
    """Piecewise closed form with the product tau(n/8) tau(n/2^v2(n)) in the exponent."""
    if n % 8 == 4:
        return 2 ** nt.divisor_count(n // 4)
    if n % 8 == 0:
        odd = n >> nt.valuation(2, n)
        return 2 ** (nt.divisor_count(n // 8) * nt.divisor_count(odd))
    return 0


def count_bruteforce(n: int, connected_only: bool = False) -> int:
    """Exhaustive count, with every subset decided by all methods (no prescreen)."""
    return len(enumerate_pst(n, connected_only, prescreen=False))
