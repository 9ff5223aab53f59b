"""Command-line interface: ``jparity <subcommand>``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Optional, Sequence

from . import _kernel, census, generators, heights, quadrep
from .f2series import dumps

DEFAULT_N = 10 ** 6
# brute-force caps for the sum-of-squares checks run by ``verify``
QUADREP_CHAIN_LIMIT = 10 ** 5
JACOBI_LIMIT = 5000


class UsageError(Exception):
    pass


def _fmt(x: float) -> str:
    return format(x, ".6g")


def _writer(out):
    return csv.writer(out, lineterminator="\n")


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def _checkpoint_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad checkpoint list {text!r}") from None


def cmd_verify(args, out) -> int:
    N = args.max_degree
    if N < 64:
        raise UsageError("--max-degree must be at least 64")
    reports = census.run_identity_suite(N, corrupt_delta_bit=args.self_test_corrupt)
    chain_limit = min(N, QUADREP_CHAIN_LIMIT)
    bad = quadrep.quadrep_chain_discrepancy(chain_limit)
    reports.append(census.IdentityReport(
        "quadrep_R_equals_M_over_64_equals_sigma_over_8", chain_limit,
        "pass" if bad is None else "fail", bad))
    jac_limit = min(N, JACOBI_LIMIT)
    bad = quadrep.jacobi_discrepancy(jac_limit)
    reports.append(census.IdentityReport(
        "quadrep_jacobi_four_square_count", jac_limit,
        "pass" if bad is None else "fail", bad))
    reports.sort(key=lambda r: r.identity_id)

    fields = ("identity_id", "max_degree", "status", "first_discrepancy")
    rows = [(r.identity_id, r.max_degree_verified, r.status, r.first_discrepancy)
            for r in reports]
    if args.format == "json":
        json.dump([dict(zip(fields, row)) for row in rows], out, indent=2)
        out.write("\n")
    else:
        w = _writer(out)
        w.writerow(fields)
        for row in rows:
            w.writerow(["" if v is None else v for v in row])
    return 0 if all(r.passed for r in reports) else 1


def _census_reports(args) -> list[census.CensusReport]:
    N = args.max_degree
    names = census.standard_series_names() if args.series == "all" else [args.series]
    reports = []
    for name in names:
        if name == "semiprime":
            if N < 15:
                raise UsageError("semiprime census needs --max-degree >= 15")
            _, rep = census.run_semiprime_census(N, args.checkpoints)
        else:
            try:
                generators.parse_name(name)
            except KeyError as exc:
                raise UsageError(exc.args[0]) from None
            rep = census.run_census(name, N, args.checkpoints)
        reports.append(rep)
    return reports


def cmd_census(args, out) -> int:
    if args.checkpoints is not None:
        if any(x > args.max_degree for x in args.checkpoints):
            raise UsageError("checkpoints must not exceed --max-degree")
        if any(x < 3 for x in args.checkpoints):
            raise UsageError("checkpoints must be at least 3")
    reports = _census_reports(args)
    fields = ("series", "x", "f1", "ref", "ratio")
    rows = [(rep.series_name, c.x, c.f1, _fmt(c.ref), _fmt(c.ratio))
            for rep in reports for c in rep.checkpoints]
    if args.format == "json":
        json.dump([{"series": s, "x": x, "f1": f, "ref": float(r), "ratio": float(q)}
                   for s, x, f, r, q in rows], out, indent=2)
        out.write("\n")
    else:
        w = _writer(out)
        w.writerow(fields)
        w.writerows(rows)
    return 0


def cmd_quadrep(args, out) -> int:
    if args.limit < 15:
        raise UsageError("--limit must be at least 15")
    w = _writer(out)
    w.writerow(("n", "p", "q", "sigma", "v2sigma"))
    for r in quadrep.semiprime_census(args.limit):
        w.writerow((r.n, r.p, r.q, r.sigma, r.v2sigma))
    return 0


def _height_row(k: int):
    prof = heights.profile(k)
    pred = heights.predicted_exponent(k) if prof.g is not None else ""
    g = prof.g if prof.g is not None else ""
    return (k, prof.n3, prof.n5, prof.h, prof.alpha, g, pred)


def cmd_heights(args, out) -> int:
    w = _writer(out)
    w.writerow(("k", "n3", "n5", "h", "alpha", "g", "predicted_exponent"))
    for k in range(1, args.k_max + 1):
        w.writerow(_height_row(k))
    return 0


def cmd_find_kt(args, out) -> int:
    if args.b % 2 == 0:
        raise UsageError("--b must be odd (reduce b = 2^s * b0 first)")
    k, t = heights.find_kt(args.b, args.K)
    out.write(f"{k},{t}\n")
    return 0


def cmd_dump_series(args, out) -> int:
    try:
        series = generators.named_series(args.series, args.max_degree)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    out.write(dumps(series))
    return 0


def cmd_bench(args, out) -> int:
    from .bench import run_benchmark

    w = _writer(out)
    w.writerow(("kernel", "operation", "degree", "seconds"))
    for row in run_benchmark(args.max_degree, repeat=args.repeat):
        w.writerow((row.kernel, row.operation, row.degree, _fmt(row.seconds)))
    out.write(f"# active backend: {_kernel.BACKEND}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jparity",
        description="Parity of j(n), cubic partitions, P_b(n) and Delta^k via GF(2) series.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the mod-2 identity suite and sum-of-squares checks")
    p.add_argument("--max-degree", type=int, default=DEFAULT_N)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--self-test-corrupt", type=int, nargs="?", const=25, default=None,
                   metavar="EXPONENT",
                   help="negative control: flip one bit of Delta (default exponent 25)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="odd-coefficient counts against reference shapes")
    p.add_argument("--series", default="all",
                   help="catalog name (c, j, p, P<b>, delta, delta<k>, R, semiprime) or 'all'")
    p.add_argument("--max-degree", type=_positive, default=DEFAULT_N)
    p.add_argument("--checkpoints", type=_checkpoint_list, default=None,
                   help="comma-separated x values (default 2^10, 2^11, ... <= N)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("quadrep", help="semiprimes pq with p = 3, q = 5 (mod 8)")
    p.add_argument("--limit", type=_positive, required=True)
    p.set_defaults(func=cmd_quadrep)

    p = sub.add_parser("heights", help="height profile of k = 1..K")
    p.add_argument("--k-max", type=_positive, required=True)
    p.set_defaults(func=cmd_heights)

    p = sub.add_parser("find-kt", help="smallest (k, t) for partition power b")
    p.add_argument("--b", type=_positive, required=True)
    p.add_argument("--K", type=_positive, required=True)
    p.set_defaults(func=cmd_find_kt)

    p = sub.add_parser("dump-series", help="write a series in F2SERIES v1 format")
    p.add_argument("--series", required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(func=cmd_dump_series)

    p = sub.add_parser("bench", help="time compiled and Python kernels")
    p.add_argument("--max-degree", type=_positive, default=DEFAULT_N)
    p.add_argument("--repeat", type=_positive, default=3)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        print(f"jparity {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
