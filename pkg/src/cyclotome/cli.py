"""Command-line interface: ``cyclotome <subcommand> ...``.

Data goes to stdout and is byte-identical across runs; timings go to stderr.
Exit codes: 0 success, 1 verification mismatch, 2 usage or parameter error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time

from . import acceptance
from .codes import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    DefiningSet,
    compute_distances,
    from_defining_set,
    records_to_csv,
    records_to_json,
)
from .cosets import classify, coset_leaders, exponent_of_two, negate_set
from .cyclotomy import (
    all_defining_sets,
    count_report,
    enumerate_construction,
    enumerate_half_dim_codes,
    hull_spectrum,
)
from .factor import factor_xn_minus_1
from .gf import PrimeField
from .golden import GoldenError, load_table, render_report, report_records, verify_table


class UsageError(Exception):
    pass


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    env = os.environ.get("CYCLOTOME_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"CYCLOTOME_THREADS must be an integer, got {env!r}")
    return 1


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _fmt_set(xs) -> str:
    return "{" + ", ".join(map(str, sorted(xs))) + "}"


def _check_nq(n, q):
    exponent_of_two(n)
    PrimeField(q)


def _code_line(rec, code) -> str:
    d = "?" if rec["min_distance"] is None else rec["min_distance"]
    lcd = "  LCD" if rec["lcd"] else ""
    return f"[{rec['n']},{rec['dimension']},{d}]  g(x) = {code.generator}  hull={rec['hull_dim']}{lcd}"


def _emit_codes(args, codes, distances):
    recs = [c.to_record(d) for c, d in zip(codes, distances)]
    if args.format == "json":
        _emit(records_to_json(recs))
    elif args.format == "csv":
        _emit(records_to_csv(recs))
    else:
        _emit("\n".join(_code_line(r, c) for r, c in zip(recs, codes)) if recs else "(no codes)")


def _distances(args, codes):
    try:
        return compute_distances(codes, args.method, args.budget, _threads(args))
    except BudgetExceeded as exc:
        raise UsageError(str(exc))


# --- subcommands ------------------------------------------------------------

def cmd_factor(args):
    _check_nq(args.n, args.q)
    fac = factor_xn_minus_1(args.n, args.q)
    if args.format == "json":
        _emit(json.dumps([f.to_json() for f in fac.multiset()]))
    elif args.format == "csv":
        cmap = {c.leader: c for c in coset_leaders(args.n, args.q)}
        rows = [(a, len(cmap[a]), str(f)) for a, f in sorted(fac.factors.items())]
        _emit(_csv(("leader", "degree", "polynomial"), rows))
    else:
        _emit("\n".join(str(f) for f in fac.multiset()))
    return 0


def cmd_cosets(args):
    _check_nq(args.n, args.q)
    cs = coset_leaders(args.n, args.q)
    if args.format == "json":
        _emit(json.dumps([list(c.elements) for c in cs]))
    elif args.format == "csv":
        _emit(_csv(("leader", "size", "elements"), [(c.leader, len(c), " ".join(map(str, c.elements))) for c in cs]))
    else:
        _emit("\n".join(str(c) for c in cs))
    return 0


def cmd_construct(args):
    codes = enumerate_construction(args.family, args.e, args.q, args.s)
    if args.index is not None:
        if not 0 <= args.index < len(codes):
            raise UsageError(f"--index must be in 0..{len(codes) - 1}")
        codes = [codes[args.index]]
    _emit_codes(args, codes, _distances(args, codes))
    return 0


def cmd_enumerate(args):
    n = 2**args.e
    _check_nq(n, args.q)
    k = n // 2 if args.dimension is None else args.dimension
    if k == n // 2:
        codes = enumerate_half_dim_codes(args.e, args.q)
    else:
        codes = [from_defining_set(S, n, args.q) for S in all_defining_sets(n, args.q)]
        codes = sorted((c for c in codes if c.dimension == k), key=lambda c: c.generator.sort_key())
    _emit_codes(args, codes, _distances(args, codes))
    return 0


def cmd_table(args):
    t0 = time.perf_counter()
    table = load_table(args.id, args.golden_dir)
    report = verify_table(table, method=args.method if args.method != "auto" else None,
                          budget=args.budget, threads=_threads(args))
    print(f"table {args.id}: {time.perf_counter() - t0:.2f}s", file=sys.stderr)
    if args.format == "json":
        _emit(records_to_json(report_records(report)))
    elif args.format == "csv":
        _emit(records_to_csv(report_records(report)))
    else:
        _emit(render_report(report, verify=args.verify))
    if args.verify and not report.ok:
        for r in report.failures:
            print(f"mismatch: {' '.join(r.labels)} expected d={r.expected}, computed {r.computed}", file=sys.stderr)
        return 1
    return 0


def _parse_leaders(text: str):
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--cosets expects comma-separated integers, got {text!r}")


def _hull_single(args):
    n, q = args.n, args.q
    S = DefiningSet.from_leaders(_parse_leaders(args.cosets), n, q)
    neg = negate_set(S.residues, n)
    diff = set(S.residues) - neg
    code = from_defining_set(S.leaders, n, q)
    (d,) = _distances(args, [code])
    rec = code.to_record(d)
    if args.format == "json":
        out = dict(rec, S=list(S.residues), neg_S=sorted(neg), S_minus_neg_S=sorted(diff))
        _emit(json.dumps(out, indent=2))
    elif args.format == "csv":
        _emit(records_to_csv([rec]))
    else:
        _emit("\n".join([
            f"S          = {_fmt_set(S.residues)}",
            f"-S         = {_fmt_set(neg)}",
            f"S \\ -S     = {_fmt_set(diff)}",
            f"hull dim   = {len(diff)}",
            f"LCD        = {'yes' if not diff else 'no'}",
            f"parameters = {code.parameters(d)}",
            f"g(x)       = {code.generator}",
        ]))
    return 0


def _hull_spectrum(args):
    n, q = args.n, args.q
    spectrum = hull_spectrum(n, q)
    if spectrum is None:
        raise UsageError("too many defining sets for an exhaustive spectrum")
    e = exponent_of_two(n)
    report = []
    try:
        family, s = classify(q, e)
        report = count_report(e, s, family, q)
    except ValueError as exc:
        report = [("closed forms", "n/a", str(exc), "unverified")]
    dims = sorted(spectrum)
    if args.format == "json":
        _emit(json.dumps({
            "n": n, "q": q,
            "spectrum": {str(k): spectrum[k] for k in range(max(dims) + 1)},
            "attainable": dims,
            "closed_forms": [{"name": a, "closed": b, "exhaustive": c, "status": d} for a, b, c, d in report],
        }, indent=2))
    elif args.format == "csv":
        _emit(_csv(("hull_dim", "count"), [(k, spectrum.get(k, 0)) for k in range(max(dims) + 1)]))
    else:
        lines = [f"hull spectrum of all {sum(spectrum.values())} cyclic codes, n={n}, q={q}"]
        lines += [f"  l={k}: {spectrum.get(k, 0)}" for k in range(max(dims) + 1)]
        lines.append(f"attainable: {_fmt_set(dims)}")
        lines.append("closed forms vs enumeration:")
        lines += [f"  {a}: closed {b}, exhaustive {c} [{d}]" for a, b, c, d in report]
        _emit("\n".join(lines))
    return 0


def cmd_hull(args):
    _check_nq(args.n, args.q)
    if args.spectrum:
        return _hull_spectrum(args)
    if args.cosets is None:
        raise UsageError("hull needs --cosets LIST or --spectrum")
    return _hull_single(args)


def cmd_verify(args):
    numbers = _parse_leaders(args.criteria) if args.criteria else None
    results = []
    for num in numbers or [c[0] for c in acceptance.CRITERIA]:
        r = acceptance.run_criterion(num, args.golden_dir, _threads(args))
        print(f"criterion {num}: {r.seconds:.2f}s", file=sys.stderr)
        results.append(r)
    if args.format == "json":
        _emit(json.dumps([{"criterion": r.number, "title": r.title, "passed": r.passed, "detail": r.detail}
                          for r in results], indent=2))
    else:
        lines = [r.line() for r in results]
        passed = sum(r.passed for r in results)
        lines.append(f"{passed}/{len(results)} criteria passed")
        _emit("\n".join(lines))
    return 0 if all(r.passed for r in results) else 1


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv")
    fmt.add_argument("--text", dest="format", action="store_const", const="text")
    common.add_argument("--threads", type=int, default=None, help="worker processes (default $CYCLOTOME_THREADS or 1)")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="brute-force codeword cap q^k")
    common.add_argument("--method", choices=("auto", "bruteforce", "support"), default="auto",
                        help="minimum-distance algorithm")
    common.set_defaults(format="text")

    p = argparse.ArgumentParser(prog="cyclotome", description="Cyclic codes of length 2^e over odd prime fields.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("factor", parents=[common], help="factor x^n - 1 over GF(q)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.set_defaults(func=cmd_factor)

    s = sub.add_parser("cosets", parents=[common], help="q-cyclotomic cosets mod n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.set_defaults(func=cmd_cosets)

    s = sub.add_parser("construct", parents=[common], help="half-rate codes from a cyclotomy construction")
    s.add_argument("--family", choices=("eq2", "eq4"), required=True)
    s.add_argument("--e", type=int, required=True)
    s.add_argument("--s", type=int, default=None, help="2-adic parameter of q (checked if given)")
    s.add_argument("--q", type=int, required=True)
    pick = s.add_mutually_exclusive_group()
    pick.add_argument("--index", type=int, default=None, help="emit only the i-th code (sorted by generator)")
    pick.add_argument("--all", action="store_true", help="emit every distinct code (default)")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("enumerate", parents=[common], help="all cyclic codes of a given dimension")
    s.add_argument("--e", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--dimension", type=int, default=None, help="default n/2")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("table", parents=[common], help="recompute a stored reference table")
    s.add_argument("--id", type=int, required=True, choices=range(1, 9), metavar="1..8")
    s.add_argument("--verify", action="store_true", help="diff against the stored values; exit 1 on mismatch")
    s.add_argument("--golden-dir", default=None)
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("hull", parents=[common], help="hull dimension of one code, or the full spectrum")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--cosets", default=None, help="comma-separated coset leaders of the defining set")
    s.add_argument("--spectrum", action="store_true")
    s.set_defaults(func=cmd_hull)

    s = sub.add_parser("verify", parents=[common], help="run every acceptance check")
    s.add_argument("--golden-dir", default=None)
    s.add_argument("--criteria", default=None, help="comma-separated subset, e.g. 1,5,8")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads is not None and args.threads < 1:
        parser.error("--threads must be >= 1")
    try:
        return args.func(args)
    except (UsageError, GoldenError, ValueError, ArithmeticError) as exc:
        print(f"cyclotome {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
