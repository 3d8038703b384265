"""Command-line interface.

Exit codes: 0 success, 1 verification failure or method disagreement,
2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import icg
from . import numtheory as nt
from . import pst
from .fidelity import fidelity_trace
from .verify import DEFAULT_MAX_N, run_suites

VERDICT_FIELDS = (
    "n", "divisors", "connected", "degree", "has_pst", "tau", "pqcd", "m",
    "spectral", "structural", "abstract_form", "numeric", "agreement",
)
COUNT_FIELDS = (
    "n", "setbased", "printed", "bruteforce_all", "bruteforce_connected",
    "printed_delta", "setbased_delta",
)


class UsageError(Exception):
    pass


def parse_divisors(text: str, strict: bool = False) -> list[int]:
    """Comma-separated integers, whitespace tolerated.

    Duplicates are an error under ``strict``; otherwise they are dropped with
    a warning on stderr.
    """
    values = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            values.append(int(token))
        except ValueError:
            raise UsageError(f"not an integer divisor: {token!r}") from None
    if not values:
        raise UsageError("no divisors given")
    dupes = sorted({d for d in values if values.count(d) > 1})
    if dupes:
        if strict:
            raise UsageError(f"duplicate divisors: {','.join(map(str, dupes))}")
        print(f"warning: ignoring duplicate divisors {','.join(map(str, dupes))}",
              file=sys.stderr)
    return values


def parse_pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--pair expects two comma-separated vertices, got {text!r}") from None
    return a, b


def _divisor_set(args) -> icg.DivisorSet:
    return icg.make_divisor_set(args.n, parse_divisors(args.divisors, args.strict))


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ";".join(map(str, value))
    return str(value)


def _emit(fmt: str, doc, rows: list[dict] | None = None, fields=None) -> None:
    """Write ``doc`` as JSON, or ``rows`` (default [doc]) as CSV."""
    if fmt == "json":
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
        return
    rows = [doc] if rows is None else rows
    fields = fields or (list(rows[0]) if rows else [])
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        writer.writerow([_csv_cell(row.get(f)) for f in fields])
    sys.stdout.write(buf.getvalue())


def verdict_document(verdict: pst.PstVerdict, include_spectrum: bool = False) -> dict:
    ds = verdict.divisor_set
    g = icg.build_graph(ds)
    doc = {
        "n": ds.n,
        "divisors": list(ds.divisors),
        "connected": g.connected,
        "degree": g.degree,
        "has_pst": verdict.has_pst,
        "tau": verdict.tau,
        "pqcd": verdict.pqcd,
        "m": verdict.common_valuation,
        "spectral": verdict.spectral_result,
        "structural": verdict.structural_result,
        "abstract_form": verdict.abstract_form_result,
        "numeric": verdict.numeric_result,
        "agreement": verdict.agreement,
    }
    if include_spectrum:
        doc["spectrum"] = list(icg.spectrum_exact(ds).values)
    return doc


def cmd_spectrum(args) -> int:
    ds = _divisor_set(args)
    values = list(icg.spectrum_exact(ds).values)
    if args.format == "json":
        _emit("json", {"n": ds.n, "divisors": list(ds.divisors), "spectrum": values})
    else:
        _emit("csv", None, [{"j": j, "lambda": v} for j, v in enumerate(values)], ["j", "lambda"])
    return 0


def cmd_check(args) -> int:
    verdict = pst.decide_pst(_divisor_set(args))
    doc = verdict_document(verdict, args.include_spectrum)
    _emit(args.format, doc, fields=list(doc))
    return 0


def cmd_enumerate(args) -> int:
    sets = pst.enumerate_pst(args.n, args.connected_only)
    rows = [verdict_document(pst.decide_pst(ds)) for ds in sets]
    if args.format == "json":
        _emit("json", {"n": args.n, "connected_only": args.connected_only,
                       "count": len(rows), "sets": rows})
    else:
        _emit("csv", None, rows, VERDICT_FIELDS)
    return 0


def count_row(n: int) -> dict:
    setbased = pst.count_formula_setbased(n)
    printed = pst.count_formula_printed(n)
    if len(nt.proper_divisors(n)) > pst.MAX_ENUM_DIVISORS:
        brute_all = brute_conn = None
    else:
        brute_all = pst.count_bruteforce(n)
        brute_conn = pst.count_bruteforce(n, connected_only=True)
    return {
        "n": n,
        "setbased": setbased,
        "printed": printed,
        "bruteforce_all": brute_all,
        "bruteforce_connected": brute_conn,
        "printed_delta": None if brute_all is None else printed - brute_all,
        "setbased_delta": None if brute_all is None else setbased - brute_all,
    }


def cmd_count(args) -> int:
    n_max = args.n_max if args.n_max is not None else args.n_min
    if args.n_min < 2 or n_max < args.n_min:
        raise UsageError(f"need 2 <= n_min <= n_max, got {args.n_min}..{n_max}")
    rows = [count_row(n) for n in range(args.n_min, n_max + 1)]
    if args.format == "json":
        _emit("json", {"rows": rows})
    else:
        _emit("csv", None, rows, COUNT_FIELDS)
    return 0


def _g12(x: float) -> str:
    return f"{x:.12g}"


def cmd_fidelity(args) -> int:
    ds = _divisor_set(args)
    if args.pair is not None:
        a, b = parse_pair(args.pair)
    elif ds.n % 2 == 0:
        a, b = ds.n // 2, 0
    else:
        raise UsageError(f"odd order {ds.n} has no antipodal vertex; pass --pair")
    for v in (a, b):
        if not 0 <= v < ds.n:
            raise UsageError(f"vertex {v} outside 0..{ds.n - 1}")
    trace = fidelity_trace(icg.spectrum_exact(ds), a, b, args.t_max, args.steps)
    cols = [
        (_g12(t), _g12(z.real), _g12(z.imag), _g12(abs(z)))
        for t, z in zip(trace.times, trace.amplitudes)
    ]
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["t", "re", "im", "abs"])
        writer.writerows(cols)
        sys.stdout.write(buf.getvalue())
    else:
        samples = [dict(zip(("t", "re", "im", "abs"), map(float, c))) for c in cols]
        _emit("json", {"n": ds.n, "divisors": list(ds.divisors), "pair": [a, b],
                       "samples": samples})
    return 0


def cmd_verify(args) -> int:
    results = run_suites(args.max_n, args.seed)
    ok = all(r.passed for r in results)
    if args.format == "json":
        doc = {
            "max_n": args.max_n,
            "seed": args.seed,
            "passed": ok,
            "suites": [
                {"name": r.name, "passed": r.passed, "checked": r.checked,
                 "witness": r.witness, "info": r.info}
                for r in results
            ],
        }
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status}  {r.name:<32} checked={r.checked:<8} {r.seconds:6.2f}s")
            if r.info:
                print(f"      {json.dumps(r.info, sort_keys=True)}")
            if r.witness is not None:
                print(f"      witness: {json.dumps(r.witness, sort_keys=True)}")
        print(f"{'ALL SUITES PASSED' if ok else 'VERIFICATION FAILED'} (max_n={args.max_n}, seed={args.seed})")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="icgpst",
        description="Spectra and perfect state transfer of integral circulant graphs ICG_n(D).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p, fmt=True):
        p.add_argument("n", type=int, help="graph order")
        p.add_argument("--divisors", required=True, help="comma-separated divisor set D")
        p.add_argument("--strict", action="store_true", help="reject duplicate divisors")
        if fmt:
            p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("spectrum", help="integer eigenvalues in DFT order")
    graph_args(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("check", help="decide PST by every method")
    graph_args(p)
    p.add_argument("--include-spectrum", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="all PST divisor sets of order n")
    p.add_argument("n", type=int)
    p.add_argument("--connected-only", action="store_true")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="PST counts: formulas against brute force")
    p.add_argument("n_min", type=int)
    p.add_argument("n_max", type=int, nargs="?")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("fidelity", help="sample |F(t)_ab| over [0, t_max]")
    graph_args(p)
    p.add_argument("--pair", help="a,b (default n/2,0)")
    p.add_argument("--t-max", type=float, default=2 * math.pi)
    p.add_argument("--steps", type=int, default=1000)
    p.set_defaults(func=cmd_fidelity)

    p = sub.add_parser("verify", help="run every property suite")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (pst.MethodDisagreement, pst.TheoremViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
