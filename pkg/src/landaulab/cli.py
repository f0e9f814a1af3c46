"""Command-line entry point wiring all modules.

Exit codes: 0 success / all checks pass, 1 verification failures found,
2 usage or IO errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import champions as champs
from . import chebyshev as cheb
from . import landau as landau_mod
from . import logintegral as lint
from . import primes as primes_mod
from . import verify as verify_mod
from . import zeros as zeros_mod
from .parallel import default_workers

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_USAGE = 2


def fmt15(x: float) -> str:
    return verify_mod.fmt15(x)


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w"), True


def _emit(lines, path: str | None) -> None:
    fh, close = _open_out(path)
    try:
        for line in lines:
            fh.write(line + "\n")
    finally:
        if close:
            fh.close()


# ---------------------------------------------------------------------------
# Subcommands


def cmd_primes(args) -> int:
    table = primes_mod.build_prime_table(args.limit)
    lines = ["index,prime"]
    lines += [f"{i + 1},{int(p)}" for i, p in enumerate(table.primes)]
    _emit(lines, args.out)
    return EXIT_OK


def cmd_li(args) -> int:
    cfg = lint.LiConfig(abs_tol=args.abs_tol, inv_tol=args.inv_tol)
    out = []
    if args.eval is not None:
        out.append(fmt15(lint.li(args.eval, cfg)))
    if args.invert is not None:
        out.append(fmt15(lint.li_inverse(args.invert, cfg)))
    if not out:
        print("li: provide --eval and/or --invert", file=sys.stderr)
        return EXIT_USAGE
    _emit(out, args.out)
    return EXIT_OK


def cmd_landau(args) -> int:
    ptable = primes_mod.build_prime_table(
        max(landau_mod.prime_bound(args.max), args.max, 2)
    )
    table = landau_mod.build_landau_table(args.max, ptable)
    if args.witness is not None:
        fac = landau_mod.factorization(args.witness, table)
        print("*".join(f"{p}^{e}" for p, e in fac.parts) or "1")
        return EXIT_OK
    lines = ["n,log_g,g_exact_if_small"]
    for n in range(1, args.max + 1):
        g = str(landau_mod.landau_exact(n, table)) if n <= args.exact_upto else ""
        lines.append(f"{n},{fmt15(float(table.log_g[n]))},{g}")
    _emit(lines, args.out)
    return EXIT_OK


def cmd_cheby(args) -> int:
    ptable = primes_mod.build_prime_table(max(args.max, 2))
    t = cheb.build_chebyshev_tables(ptable, args.max)
    env = cheb.build_R_envelope(ptable, args.max)
    lines = ["x,theta,psi,pi1,R"]
    for q in t.pp_breaks:
        x = float(q)
        lines.append(
            ",".join(
                [
                    fmt15(x),
                    fmt15(cheb.theta(x, t)),
                    fmt15(cheb.psi(x, t)),
                    fmt15(cheb.pi1(x, t)),
                    fmt15(cheb.R_value(env, x)),
                ]
            )
        )
    _emit(lines, args.out)
    return EXIT_OK


def cmd_zeros(args) -> int:
    table = zeros_mod.load_zeros_file(args.file)
    cs = zeros_mod.constant_c(table)
    lines = [
        f"partial {fmt15(cs.partial)}",
        f"tail_hi {fmt15(cs.tail_hi)}",
        f"interval_lo {fmt15(cs.interval[0])}",
        f"interval_hi {fmt15(cs.interval[1])}",
        "# ingested ordinates assumed on the critical line (Re = 1/2)",
    ]
    _emit(lines, args.out)
    return EXIT_OK


def cmd_champions(args) -> int:
    if args.witness:
        ptable = primes_mod.build_prime_table(max(args.xmax, 2))
        t = cheb.build_chebyshev_tables(ptable, args.xmax)
        lines = ["x1,W,LiPsiSq_minus_Pi1"]
        grid = np.logspace(1, math.log10(args.xmax), args.grid_points)
        for x1 in grid:
            x1 = float(x1)
            w = champs.witness_W(x1, t)
            ps = cheb.psi(x1, t)
            alt = lint.Li(max(ps * ps, 2.0)) - cheb.pi1(x1, t)
            lines.append(f"{fmt15(x1)},{fmt15(w)},{fmt15(alt)}")
        _emit(lines, args.out)
        return EXIT_OK
    seq = champs.champion_sequence(args.rho_max)
    lines = ["rho,x1,log_N,ell,num_primes"]
    for ch in seq:
        lines.append(
            ",".join(
                [
                    fmt15(ch.rho),
                    fmt15(ch.x1),
                    fmt15(ch.log_N),
                    str(ch.ell),
                    str(len(ch.exponents)),
                ]
            )
        )
    _emit(lines, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.from_n > args.to_n:
        print(f"verify: empty range [{args.from_n}, {args.to_n}]", file=sys.stderr)
        return EXIT_USAGE
    zt = zeros_mod.load_zeros_file(args.zeros) if args.zeros else None
    deps = verify_mod.build_deps(args.to_n, zeros=zt, workers=args.workers)
    report = verify_mod.run_range(args.from_n, args.to_n, deps, workers=args.workers)
    if args.emit == "json":
        _emit([verify_mod.report_to_json(report)], args.out)
    else:
        _emit(verify_mod.iter_csv_rows(args.from_n, args.to_n, deps), args.out)
    return EXIT_OK if report.n_failures == 0 else EXIT_FAILURES


def cmd_report(args) -> int:
    """Bundled reproduction run: verify sweep, threshold scan, champions, c."""
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    zt = zeros_mod.load_zeros_file(args.zeros) if args.zeros else None
    deps = verify_mod.build_deps(args.max_n, zeros=zt, workers=args.workers)
    report = verify_mod.run_range(1, args.max_n, deps, workers=args.workers)
    with open(out_dir / "verify.csv", "w") as fh:
        for line in verify_mod.iter_csv_rows(1, args.max_n, deps):
            fh.write(line + "\n")

    scan = verify_mod.threshold_scan()
    with open(out_dir / "thresholds.csv", "w") as fh:
        fh.write("n,f1,f2\n")
        for i in range(len(scan.grid)):
            fh.write(
                f"{fmt15(float(scan.grid[i]))},{fmt15(float(scan.f1[i]))},{fmt15(float(scan.f2[i]))}\n"
            )

    seq = champs.champion_sequence(args.rho_max)
    with open(out_dir / "champions.csv", "w") as fh:
        fh.write("rho,x1,log_N,ell,num_primes\n")
        for ch in seq:
            fh.write(
                f"{fmt15(ch.rho)},{fmt15(ch.x1)},{fmt15(ch.log_N)},{ch.ell},{len(ch.exponents)}\n"
            )

    summary = {
        "max_n": args.max_n,
        "counts": report.counts,
        "n_failures": report.n_failures,
        "f1_at_1e10": scan.f1_at_1e10,
        "f2_at_1e10": scan.f2_at_1e10,
        "f1_bracket": list(scan.f1_bracket),
        "f2_bracket": list(scan.f2_bracket),
        "critical_line_assumption": "ingested ordinates assumed on Re = 1/2",
    }
    if zt is not None:
        cs = zeros_mod.constant_c(zt)
        summary["c_partial"] = cs.partial
        summary["c_tail_hi"] = cs.tail_hi
        summary["c_interval"] = list(cs.interval)
    with open(out_dir / "summary.json", "w") as fh:
        fh.write(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    return EXIT_OK if report.n_failures == 0 else EXIT_FAILURES


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="landaulab",
        description=(
            "Desk-scale verification of the bound g(n) <= exp(sqrt(p_n)) for "
            "Landau's function, with the supporting prime, logarithmic-integral, "
            "Chebyshev, zeta-zero and superchampion machinery."
        ),
    )
    ap.add_argument(
        "--workers",
        type=int,
        default=default_workers(),
        help="worker thread count (env LANDAULAB_WORKERS)",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("primes", help="emit primes: p_n enumeration and pi(x) table")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--emit", choices=["csv"], default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_primes)

    p = sub.add_parser(
        "li",
        help="logarithmic integral li(x) and its inverse (used in the bound "
        "g(n) <= exp(sqrt(li^-1(n))))",
    )
    p.add_argument("--eval", type=float, default=None)
    p.add_argument("--invert", type=float, default=None)
    p.add_argument("--abs-tol", type=float, default=1e-12)
    p.add_argument("--inv-tol", type=float, default=1e-9)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_li)

    p = sub.add_parser(
        "landau",
        help="Landau's function g(n): max order of a permutation of n elements",
    )
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--witness", type=int, default=None)
    p.add_argument("--exact-upto", type=int, default=200)
    p.add_argument("--emit", choices=["csv"], default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_landau)

    p = sub.add_parser(
        "cheby",
        help="Chebyshev theta/psi, Pi1 prime-power sum and the error envelope "
        "R(x) = sup |pi - Li|",
    )
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--emit", choices=["csv"], default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_cheby)

    p = sub.add_parser(
        "zeros",
        help="enclose c = sum over zeta zeros of 1/|rho(rho+1)| ~ 0.0461176",
    )
    p.add_argument("--file", required=True)
    p.add_argument("--report", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_zeros)

    p = sub.add_parser(
        "champions",
        help="superchampion numbers N_rho (greedy prime-power construction, "
        "image inside g's image) and the witness quantity "
        "Li(x1^2) - Pi1(x1) + (x1/log x1)(psi(x1) - x1)",
    )
    p.add_argument("--rho-max", type=float, default=50.0)
    p.add_argument("--witness", action="store_true")
    p.add_argument("--xmax", type=int, default=100_000)
    p.add_argument("--grid-points", type=int, default=64)
    p.add_argument("--emit", choices=["csv"], default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_champions)

    p = sub.add_parser(
        "verify",
        help="sweep the inequality chain: g(n) <= exp(sqrt(p_n)), the a_n "
        "lower bound, the Schoenfeld-type gap bounds, Rosser/crude bounds "
        "and pi <= li",
    )
    p.add_argument("--from", dest="from_n", type=int, default=1)
    p.add_argument("--to", dest="to_n", type=int, required=True)
    p.add_argument("--zeros", default=None)
    p.add_argument("--emit", choices=["csv", "json"], default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser(
        "report",
        help="bundled reproduction run: verify sweep + threshold scan + "
        "champion table + zero-sum constant, written to a directory",
    )
    p.add_argument("--max-n", type=int, default=1_000_000)
    p.add_argument("--rho-max", type=float, default=50.0)
    p.add_argument("--zeros", default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_report)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (zeros_mod.ZeroTableError, OSError) as exc:
        print(f"landaulab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, primes_mod.SieveRangeError) as exc:
        print(f"landaulab: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
