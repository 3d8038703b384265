"""Executable property suites over the arithmetic, spectral and PST layers.

Each suite returns a SuiteResult. A suite stops at its first counterexample
and records it as a JSON-serialisable witness. Ranges scale linearly with
``max_n``; the reference ranges apply at the default max_n = 64.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from . import icg
from . import numtheory as nt
from . import pst
from .fidelity import TWO_PI, transfer_amplitude, verify_periodicity

DEFAULT_MAX_N = 64


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    witness: dict | None = None
    info: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.witness is None

    def fail(self, **witness) -> "SuiteResult":
        self.witness = witness
        return self


def _scaled(max_n: int, reference: int) -> int:
    return max(4, reference * max_n // DEFAULT_MAX_N)


def random_divisor_set(rng: random.Random, lo: int, hi: int, keep=None) -> icg.DivisorSet:
    """Uniform n in [lo, hi], then each admissible proper divisor with probability 1/2."""
    while True:
        n = rng.randint(lo, hi)
        pool = [d for d in nt.proper_divisors(n) if keep is None or keep(n, d)]
        if not pool:
            continue
        chosen = [d for d in pool if rng.random() < 0.5]
        if chosen:
            return icg.DivisorSet(n, tuple(chosen))


def odd_part_radical_exponent(n: int) -> int:
    """prod p^(a-1) over the odd prime powers p^a exactly dividing n."""
    return math.prod(p ** (a - 1) for p, a in nt.factorize(n) if p != 2)


# -- arithmetic layer ------------------------------------------------------

def suite_ramanujan_dual(max_n: int, rng: random.Random) -> SuiteResult:
    res = SuiteResult("ramanujan_dual")
    for n in range(1, _scaled(max_n, 500) + 1):
        row = nt.ramanujan_oracle_row(n)
        for j in range(n):
            res.checked += 1
            exact = nt.ramanujan(j, n)
            if exact != row[j]:
                return res.fail(j=j, n=n, formula=exact, root_sum=row[j])
    return res


def suite_ramanujan_reduction(max_n: int, rng: random.Random) -> SuiteResult:
    res = SuiteResult("ramanujan_reduction")
    for n in range(1, _scaled(max_n, 500) + 1):
        for j in range(2 * n):
            res.checked += 1
            a = nt.ramanujan(j, n)
            b = nt.ramanujan(j % n, n)
            c = nt.ramanujan(math.gcd(j, n), n)
            if not a == b == c:
                return res.fail(j=j, n=n, c_j=a, c_j_mod_n=b, c_gcd=c)
    return res


def suite_ramanujan_special_values(max_n: int, rng: random.Random) -> SuiteResult:
    res = SuiteResult("ramanujan_special_values")
    c = nt.ramanujan
    for n in range(1, _scaled(max_n, 500) + 1):
        if n % 2:
            two = nt.mobius(n)
        elif n % 4:
            two = nt.mobius(n // 2)
        else:
            two = 2 * nt.mobius(n // 2)
        checks = {
            "c(0,n)=phi(n)": (c(0, n), nt.euler_phi(n)),
            "c(1,n)=mu(n)": (c(1, n), nt.mobius(n)),
            "c(2,n)": (c(2, n), two),
        }
        if n % 2 == 0:
            for d in nt.divisors(n):
                sign = 1 if d % 2 == 0 else -1
                checks[f"c(n/2,n/d) d={d}"] = (c(n // 2, n // d), sign * nt.euler_phi(n // d))
        for label, (got, want) in checks.items():
            res.checked += 1
            if got != want:
                return res.fail(n=n, identity=label, got=got, expected=want)
    return res


def suite_ramanujan_column_sums(max_n: int, rng: random.Random) -> SuiteResult:
    res = SuiteResult("ramanujan_column_sums")
    for n in range(2, _scaled(max_n, 500) + 1):
        res.checked += 1
        total = sum(nt.ramanujan(j, n) for j in range(n))
        if total:
            return res.fail(n=n, sum=total)
    return res


def suite_parity_lemma(max_n: int, rng: random.Random) -> SuiteResult:
    """c(j, n) odd iff 4 does not divide n and j = P J with gcd(J, n) in {1, 2}."""
    res = SuiteResult("ramanujan_parity_lemma")
    for n in range(2, _scaled(max_n, 300) + 1):
        p = odd_part_radical_exponent(n)
        for j in range(n):
            res.checked += 1
            odd = nt.ramanujan(j, n) % 2 == 1
            predicted = n % 4 != 0 and j % p == 0 and math.gcd(j // p, n) in (1, 2)
            if odd != predicted:
                return res.fail(n=n, j=j, c=nt.ramanujan(j, n), predicted_odd=predicted)
    return res


def suite_sign_flip(max_n: int, rng: random.Random, samples: int = 1000) -> SuiteResult:
    """For n/d odd: c(j, n/d) = -c(j, 2n/d) for odd j, equal for even j."""
    res = SuiteResult("ramanujan_sign_flip")
    hi = _scaled(max_n, 300)
    while res.checked < samples:
        n = 2 * rng.randint(1, hi // 2)
        ds = [d for d in nt.divisors(n) if (n // d) % 2 == 1]
        d = rng.choice(ds)
        j = rng.randrange(n)
        res.checked += 1
        lhs, rhs = nt.ramanujan(j, n // d), nt.ramanujan(j, 2 * n // d)
        want = -rhs if j % 2 else rhs
        if lhs != want:
            return res.fail(n=n, d=d, j=j, c_n_over_d=lhs, c_2n_over_d=rhs)
    return res


def suite_halving(max_n: int, rng: random.Random, samples: int = 1000) -> SuiteResult:
    """Even n, even j: c(j, n/d) in terms of c(j/2, .) by the class of d."""
    res = SuiteResult("ramanujan_halving")
    hi = _scaled(max_n, 300)
    while res.checked < samples:
        n = 2 * rng.randint(1, hi // 2)
        d = rng.choice(nt.divisors(n))
        j = 2 * rng.randrange(n // 2)
        h = n // 2
        k = nt.valuation(2, n // d)
        lhs = nt.ramanujan(j, n // d)
        if k == 0:
            rhs = nt.ramanujan(j // 2, h // (d // 2))
        elif k == 1:
            rhs = nt.ramanujan(j // 2, h // d)
        else:
            rhs = 2 * nt.ramanujan(j // 2, h // d)
        res.checked += 1
        if lhs != rhs:
            return res.fail(n=n, d=d, j=j, v2_n_over_d=k, lhs=lhs, rhs=rhs)
    return res


# -- graph layer -----------------------------------------------------------

def suite_spectrum_dual(max_n: int, rng: random.Random, samples: int = 100) -> SuiteResult:
    res = SuiteResult("spectrum_exact_vs_oracle")
    for _ in range(samples):
        ds = random_divisor_set(rng, 2, _scaled(max_n, 200))
        g = icg.build_graph(ds)
        res.checked += 1
        exact, oracle = icg.spectrum_exact(g), icg.spectrum_oracle(g)
        if exact != oracle:
            return res.fail(n=ds.n, divisors=list(ds), exact=list(exact), oracle=list(oracle))
    return res


def spectrum_invariant_failure(g: icg.IcgGraph, spec: icg.IntegerSpectrum) -> str | None:
    n, vals = g.n, spec.values
    if vals[0] != g.degree:
        return "lambda_0 != degree"
    if any(vals[j] != vals[n - j] for j in range(1, n)):
        return "lambda_j != lambda_{n-j}"
    if sum(vals):
        return "trace != 0"
    if any(abs(v) > vals[0] for v in vals):
        return "|lambda_j| > lambda_0"
    return None


def suite_graph_invariants(max_n: int, rng: random.Random, samples: int = 100) -> SuiteResult:
    res = SuiteResult("graph_invariants")
    for _ in range(samples):
        ds = random_divisor_set(rng, 2, _scaled(max_n, 100))
        g = icg.build_graph(ds)
        spec = icg.spectrum_exact(g)
        res.checked += 1
        why = spectrum_invariant_failure(g, spec)
        if why:
            return res.fail(n=ds.n, divisors=list(ds), spectrum=list(spec), violated=why)
        n = g.n
        nbrs = [b for b in range(n) if icg.adjacent(g, 0, b)]
        if len(nbrs) != g.degree or icg.adjacent(g, 0, 0):
            return res.fail(n=n, divisors=list(ds), violated="adjacency degree/loop")
        a = rng.randrange(n)
        b = rng.randrange(n)
        if icg.adjacent(g, a, b) != icg.adjacent(g, b, a):
            return res.fail(n=n, divisors=list(ds), a=a, b=b, violated="adjacency symmetry")
    return res


def suite_integrality_roundtrip(max_n: int, rng: random.Random) -> SuiteResult:
    res = SuiteResult("integrality_roundtrip")
    for n in range(2, _scaled(max_n, 100) + 1):
        for ds in pst.iter_divisor_sets(n):
            res.checked += 1
            back = icg.integrality_check(n, icg.build_graph(ds).symbol)
            if back != ds:
                return res.fail(n=n, divisors=list(ds), recovered=repr(back))
    return res


def _odd_position_parities(spec: icg.IntegerSpectrum) -> list[int]:
    return [spec[j] % 2 for j in range(1, spec.n, 2)]


def suite_odd_index_theorem(max_n: int, rng: random.Random, samples: int = 500) -> SuiteResult:
    """Odd-position parity results, for divisor sets with 4 not dividing any n/d."""
    res = SuiteResult("odd_position_parity")
    no_four = lambda n, d: (n // d) % 4 != 0
    for _ in range(samples):
        ds = random_divisor_set(rng, 2, _scaled(max_n, 120), keep=no_four)
        n, dset = ds.n, set(ds)
        spec = icg.spectrum_exact(ds)
        parities = _odd_position_parities(spec)
        part = icg.partition_divisors(ds)
        res.checked += 1
        has_odd = any(parities)
        lonely = any(
            (d % 2 or d // 2 not in dset) and 2 * d not in dset for d in dset
        )
        if has_odd != lonely:
            return res.fail(n=n, divisors=list(ds), claim="odd eigenvalue at odd index",
                            spectrum_has=has_odd, divisor_condition=lonely)
        d1_form = dset == set(part.d1) | {2 * d for d in part.d1}
        if (not has_odd) != d1_form:
            return res.fail(n=n, divisors=list(ds), claim="all even iff D = D1 u 2D1")
        if n % 2 == 0 and n // 2 in dset:
            star = set(part.d1star)
            allodd_form = dset == star | {2 * d for d in star} | {n // 2}
            if all(parities) != allodd_form:
                return res.fail(n=n, divisors=list(ds),
                                claim="all odd iff D = D1* u 2D1* u {n/2}")
    return res


# -- PST layer -------------------------------------------------------------

def suite_equivalence_sweep(max_n: int, rng: random.Random) -> SuiteResult:
    res = SuiteResult("pst_equivalence_sweep")
    census = {"connected": 0, "disconnected": 0, "pst_connected": 0, "pst_disconnected": 0}
    for n in range(2, max_n + 1):
        for ds in pst.iter_divisor_sets(n):
            res.checked += 1
            conn = "connected" if math.gcd(n, *ds.divisors) == 1 else "disconnected"
            census[conn] += 1
            try:
                verdict = pst.decide_pst(ds)
            except (pst.MethodDisagreement, pst.TheoremViolation) as exc:
                return res.fail(n=n, divisors=list(ds), connected=conn, error=str(exc))
            census["pst_" + conn] += verdict.has_pst
    res.info = census
    return res


def suite_negative_regimes(max_n: int, rng: random.Random) -> SuiteResult:
    """Odd n: nothing. n = 2 mod 4, n >= 6: no connected graph; only the matching {n/2}."""
    res = SuiteResult("pst_negative_regimes")
    for n in range(3, min(max_n, 50) + 1):
        if n % 4 == 0:
            continue
        res.checked += 1
        found = [list(d) for d in pst.enumerate_pst(n, prescreen=False)]
        expected = [] if n % 2 else [[n // 2]]
        if found != expected:
            return res.fail(n=n, found=found, expected=expected)
        connected = [list(d) for d in pst.enumerate_pst(n, True, prescreen=False)]
        if connected:
            return res.fail(n=n, connected_found=connected)
    return res


def pst_positive_failure(ds: icg.DivisorSet) -> str | None:
    """Name the first PST-structure property that a PST-positive set violates."""
    n = ds.n
    spec = icg.spectrum_exact(ds)
    ok, m = pst.pst_spectral(spec)
    if not ok:
        return "not PST-positive"
    if m != 1:
        return f"common valuation {m} != 1"
    if not pst.spectral_structure_check(ds, spec):
        return "spectrum shape"
    part = icg.partition_divisors(ds)
    if set(part.d0) != {2 * d for d in part.d1star}:
        return "D0 != 2(D1 minus n/2)"
    if set(part.d1star) != {2 * d for d in part.d2star}:
        return "D1 minus n/2 != 2(D2 minus n/4)"
    half = n % 2 == 0 and n // 2 in ds
    quarter = n % 4 == 0 and n // 4 in ds
    if half == quarter:
        return "not exactly one of n/2, n/4"
    dist = icg.graph_distance(icg.build_graph(ds), 0, n // 2)
    if dist != (1 if half else 2):
        return f"BFS distance {dist} disagrees with pqcd"
    return None


def suite_pst_structure(max_n: int, rng: random.Random) -> SuiteResult:
    res = SuiteResult("pst_spectrum_structure")
    for n in range(2, max_n + 1, 2):
        for ds in pst.enumerate_pst(n):
            res.checked += 1
            why = pst_positive_failure(ds)
            if why:
                return res.fail(n=n, divisors=list(ds), violated=why)
    return res


def suite_counting(max_n: int, rng: random.Random) -> SuiteResult:
    res = SuiteResult("pst_counting")
    deltas = {}
    for n in range(4, max_n + 1, 4):
        res.checked += 1
        brute = pst.count_bruteforce(n)
        formula = pst.count_formula_setbased(n)
        if brute != formula:
            return res.fail(n=n, bruteforce=brute, setbased=formula)
        printed = pst.count_formula_printed(n)
        if printed != brute:
            deltas[n] = {"printed": printed, "bruteforce": brute}
    res.info = {"printed_formula_deviations": deltas}
    return res


def suite_cocktail_party(max_n: int, rng: random.Random) -> SuiteResult:
    res = SuiteResult("cocktail_party")
    for n in range(4, max_n + 1, 4):
        res.checked += 1
        ds = icg.make_divisor_set(n, set(nt.proper_divisors(n)) - {n // 2})
        if not pst.decide_pst(ds).has_pst:
            return res.fail(n=n, divisors=list(ds))
    return res


def suite_swap(max_n: int, rng: random.Random) -> SuiteResult:
    res = SuiteResult("swap_quarter_half")
    for n in range(4, min(max_n, 48) + 1, 4):
        pool = [d for d in nt.proper_divisors(n) if d not in (n // 2, n // 4)]
        for r in range(len(pool) + 1):
            for base in combinations(pool, r):
                res.checked += 1
                if not pst.swap_check(n, base):
                    return res.fail(n=n, base=list(base))
    return res


# -- fidelity layer --------------------------------------------------------

def suite_fidelity(max_n: int, rng: random.Random, samples: int = 100) -> SuiteResult:
    res = SuiteResult("fidelity_unitarity_periodicity")
    for _ in range(samples):
        ds = random_divisor_set(rng, 2, max_n)
        spec = icg.spectrum_exact(ds)
        n = ds.n
        t = rng.uniform(0.0, 50.0)
        res.checked += 1
        row = [transfer_amplitude(spec, 0, b, t) for b in range(n)]
        norm = sum(abs(z) ** 2 for z in row)
        if abs(norm - 1.0) > 1e-9:
            return res.fail(n=n, divisors=list(ds), t=t, row_norm=norm)
        if not verify_periodicity(spec):
            return res.fail(n=n, divisors=list(ds), violated="F(2 pi) != I")
        c = rng.randrange(n)
        a, b = rng.randrange(n), rng.randrange(n)
        z1 = transfer_amplitude(spec, a, b, t)
        z2 = transfer_amplitude(spec, (a + c) % n, (b + c) % n, t)
        if abs(z1 - z2) > 1e-12:
            return res.fail(n=n, divisors=list(ds), violated="translation invariance")
    return res


SUITES: list[Callable[[int, random.Random], SuiteResult]] = [
    suite_ramanujan_dual,
    suite_ramanujan_reduction,
    suite_ramanujan_special_values,
    suite_ramanujan_column_sums,
    suite_parity_lemma,
    suite_sign_flip,
    suite_halving,
    suite_spectrum_dual,
    suite_graph_invariants,
    suite_integrality_roundtrip,
    suite_odd_index_theorem,
    suite_equivalence_sweep,
    suite_negative_regimes,
    suite_pst_structure,
    suite_counting,
    suite_cocktail_party,
    suite_swap,
    suite_fidelity,
]


def run_suites(max_n: int = DEFAULT_MAX_N, seed: int = 0) -> list[SuiteResult]:
    """Run every suite with its own RNG derived from ``seed``."""
    results = []
    for i, suite in enumerate(SUITES):
        rng = random.Random(seed * 1000 + i)
        start = time.perf_counter()
        try:
            res = suite(max_n, rng)
        except Exception as exc:  # an exception inside a suite is itself a failure
            res = SuiteResult(suite.__name__.removeprefix("suite_"))
            res.fail(error=f"{type(exc).__name__}: {exc}")
        res.seconds = time.perf_counter() - start
        results.append(res)
    return results
