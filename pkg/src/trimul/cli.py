"""Command-line interface: reproduce the solution, residue, classification,
and benchmark tables in machine-readable form.

Subcommands::

    trimul solve K [--count N] [--bound B] [--ratios] [--format F]
    trimul residues (K | --range A..B) [--format F]
    trimul classify (K | --range A..B) [--n-max N] [--format F]
    trimul bench K [--limit N] [--reps R] [--format F]
    trimul oeis verify --k K [--count N] [--offline] [--cache-dir D]

Formats: ``table`` (human), ``json`` (one document per invocation), ``csv``
(fixed, versioned columns with a header row).  Range output is emitted in
ascending k with squares skipped; an explicitly requested square k is an
error instead.

Exit codes: 0 success; 1 verification mismatch; 2 input validation;
3 internal divergence (strategies disagree -- a bug); 4 network or cache
failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import __version__
from .arith import is_square
from .oeis import (
    SEQUENCE_IDS,
    OfflineCacheMissError,
    crosscheck,
)
from .residues import observed_residues
from .rules import RESIDUE_TABLE_ERRATA, predict_residues
from .sieve import DivergenceError, bench
from .solver import (
    InvalidMultiplierError,
    solution_sequence,
    solve,
    validate_multiplier,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_VALIDATION = 2
EXIT_DIVERGENCE = 3
EXIT_NETWORK = 4

FORMATS = ("table", "json", "csv")


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ValueError(f"range must look like A..B, got {text!r}")
    return int(lo), int(hi)


def _range_multipliers(args) -> list[int]:
    """Non-square k values selected by K or --range; squares are skipped."""
    if args.k is not None:
        return [validate_multiplier(args.k)]
    lo, hi = _parse_range(args.range)
    ks = [k for k in range(max(lo, 2), hi + 1) if not is_square(k)]
    if not ks:
        raise InvalidMultiplierError(f"range {args.range} contains no non-square k >= 2")
    return ks


def _emit_csv(header: list[str], rows: list[list]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _emit_table(header: list[str], rows: list[list]) -> None:
    cells = [header] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    for r in cells:
        print("  ".join(c.rjust(w) for c, w in zip(r, widths)))


# --- solve -----------------------------------------------------------------

def cmd_solve(args) -> int:
    try:
        k = validate_multiplier(args.k)
    except InvalidMultiplierError as e:
        return _fail(f"k must be a non-square integer >= 2 ({e})", EXIT_VALIDATION)
    if args.count < 1:
        return _fail("--count must be >= 1", EXIT_VALIDATION)

    if args.bound is not None:
        from .solver import detect_rank, find_base_solutions

        spec = detect_rank(find_base_solutions(k, args.bound))
    else:
        spec = solve(k)
    sols = solution_sequence(spec, args.count)

    if args.format == "json":
        doc = {
            "k": k,
            "r": spec.r,
            "kappa": spec.kappa,
            "gamma": spec.gamma,
            "two_kappa_plus_three": 2 * spec.kappa + 3,
            "solutions": [
                {"n": s.n, "t": s.t, "xi": s.xi, "T_t": s.tri_t, "T_xi": s.tri_xi}
                for s in sols
            ],
        }
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        header = ["k", "r", "kappa", "gamma", "n", "t", "xi", "T_t", "T_xi"]
        rows = [[k, spec.r, spec.kappa, spec.gamma, s.n, s.t, s.xi, s.tri_t, s.tri_xi]
                for s in sols]
        _emit_csv(header, rows)
    else:
        print(f"k={k}  r={spec.r}  kappa={spec.kappa}  2*kappa+3={2 * spec.kappa + 3}  "
              f"gamma={spec.gamma}")
        header = ["n", "t", "xi", "T_t", "T_xi"]
        rows = []
        for i, s in enumerate(sols):
            row = [s.n, s.t, s.xi, s.tri_t, s.tri_xi]
            if args.ratios:
                prev = sols[i - 1].t if i >= 1 else 0
                row.append(f"{s.t / prev:.3f}" if i >= 1 and prev else "--")
            rows.append(row)
        if args.ratios:
            header.append("t_n/t_n-1")
        _emit_table(header, rows)
    return EXIT_OK


# --- residues ----------------------------------------------------------------

def cmd_residues(args) -> int:
    try:
        ks = _range_multipliers(args)
    except (InvalidMultiplierError, ValueError) as e:
        return _fail(str(e), EXIT_VALIDATION)

    rows = []
    for k in ks:
        rs = observed_residues(solve(k))
        rows.append((k, rs.upsilon, list(rs.mu)))

    if args.format == "json":
        doc = {"rows": [{"k": k, "upsilon": u, "mu": mu} for k, u, mu in rows]}
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        _emit_csv(["k", "upsilon", "mu"],
                  [[k, u, " ".join(map(str, mu))] for k, u, mu in rows])
    else:
        _emit_table(["k", "upsilon", "mu"],
                    [[k, u, " ".join(map(str, mu))] for k, u, mu in rows])
    return EXIT_OK


# --- classify ----------------------------------------------------------------

def cmd_classify(args) -> int:
    try:
        ks = _range_multipliers(args)
    except (InvalidMultiplierError, ValueError) as e:
        return _fail(str(e), EXIT_VALIDATION)

    reports = [predict_residues(k, n_max=args.n_max) for k in ks]

    if args.format == "json":
        doc = {"rows": []}
        for rep in reports:
            doc["rows"].append({
                "k": rep.k,
                "findings": [
                    {"code": f.code, "params": f.params, "form": f.form,
                     "predicted_mu": list(f.predicted_mu)}
                    for f in rep.findings
                ],
                "superseded": [list(p) for p in rep.superseded],
                "predicted": list(rep.predicted),
                "observed": list(rep.observed.mu),
                "verdict": rep.verdict,
                "errata": RESIDUE_TABLE_ERRATA.get(rep.k),
            })
        print(json.dumps(doc, indent=2))
    else:
        header = ["k", "codes", "superseded", "predicted", "observed", "verdict", "errata"]
        rows = []
        for rep in reports:
            rows.append([
                rep.k,
                ",".join(f.code for f in rep.findings) or "-",
                " ".join(f"{w}>{l}" for w, l in rep.superseded) or "-",
                " ".join(map(str, rep.predicted)) or "-",
                " ".join(map(str, rep.observed.mu)),
                rep.verdict,
                RESIDUE_TABLE_ERRATA.get(rep.k, ""),
            ])
        if args.format == "csv":
            _emit_csv(header, rows)
        else:
            _emit_table(header, rows)
    return EXIT_OK


# --- bench -------------------------------------------------------------------

def cmd_bench(args) -> int:
    try:
        k = validate_multiplier(args.k)
    except InvalidMultiplierError as e:
        return _fail(f"k must be a non-square integer >= 2 ({e})", EXIT_VALIDATION)
    if args.reps < 3:
        return _fail("--reps must be >= 3", EXIT_VALIDATION)
    if args.limit < 1:
        return _fail("--limit must be >= 1", EXIT_VALIDATION)

    try:
        report = bench(k, args.limit, args.reps)
    except DivergenceError as e:
        return _fail(str(e), EXIT_DIVERGENCE)

    doc = {
        "k": report.k,
        "limit": report.limit,
        "upsilon": report.upsilon,
        "naive_candidates": report.naive_candidates,
        "sieve_candidates": report.sieve_candidates,
        "naive_time_ns": report.naive_time_ns,
        "sieve_time_ns": report.sieve_time_ns,
        "solutions_found": report.solutions_found,
        "measured_gain": report.measured_gain,
        "candidate_gain": report.candidate_gain,
    }
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        _emit_csv(list(doc), [list(doc.values())])
    else:
        for key, val in doc.items():
            if isinstance(val, float):
                val = f"{val:.3f}"
            print(f"{key:>18}: {val}")
    return EXIT_OK


# --- oeis ----------------------------------------------------------------

def cmd_oeis_verify(args) -> int:
    if args.k not in SEQUENCE_IDS:
        return _fail(
            f"no catalogued sequences for k={args.k}; choose from {sorted(SEQUENCE_IDS)}",
            EXIT_VALIDATION,
        )
    if args.count < 1:
        return _fail("--count must be >= 1", EXIT_VALIDATION)
    try:
        report = crosscheck(args.k, args.count, cache_dir=args.cache_dir, offline=args.offline)
    except OfflineCacheMissError as e:
        return _fail(str(e), EXIT_NETWORK)
    except OSError as e:
        return _fail(f"network/cache failure: {e}", EXIT_NETWORK)

    if args.format == "json":
        doc = {
            "k": report.k,
            "count": report.count,
            "ok": report.ok,
            "roles": [
                {"role": r.role, "oeis_id": r.oeis_id, "shift": r.shift,
                 "compared": r.compared, "matched": r.matched,
                 "mismatches": [list(m) for m in r.mismatches]}
                for r in report.roles
            ],
        }
        print(json.dumps(doc, indent=2))
    else:
        header = ["role", "oeis_id", "shift", "compared", "status"]
        rows = [[r.role, r.oeis_id, r.shift, r.compared,
                 "OK" if r.matched else f"MISMATCH x{len(r.mismatches)}"]
                for r in report.roles]
        if args.format == "csv":
            _emit_csv(header, rows)
        else:
            _emit_table(header, rows)
    return EXIT_OK if report.ok else EXIT_MISMATCH


# --- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trimul",
        description="Triangular numbers that are k-fold multiples of other "
                    "triangular numbers: solutions, residue classes, and the "
                    "congruence-sieved search.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solution pairs and recurrence constants for one k")
    p.add_argument("k", type=int)
    p.add_argument("--count", type=int, default=7, help="number of solutions (default 7)")
    p.add_argument("--bound", type=int, default=None,
                   help="derive the recurrence by direct scan up to this t bound")
    p.add_argument("--ratios", action="store_true", help="append t_n/t_{n-1} (table format)")
    p.add_argument("--format", choices=FORMATS, default="table")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("residues", help="observed residue classes of xi mod k")
    p.add_argument("k", type=int, nargs="?", default=None)
    p.add_argument("--range", help="A..B (squares skipped)")
    p.add_argument("--format", choices=FORMATS, default="table")
    p.set_defaults(func=cmd_residues)

    p = sub.add_parser("classify", help="rule/expression predictions vs observed residues")
    p.add_argument("k", type=int, nargs="?", default=None)
    p.add_argument("--range", help="A..B (squares skipped)")
    p.add_argument("--n-max", type=int, default=12, help="largest divisor n (default 12)")
    p.add_argument("--format", choices=FORMATS, default="table")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("bench", help="naive vs sieved search timing for one k")
    p.add_argument("k", type=int)
    p.add_argument("--limit", type=int, default=10**6, help="xi search bound (default 1e6)")
    p.add_argument("--reps", type=int, default=5, help="timed repetitions (default 5)")
    p.add_argument("--format", choices=FORMATS, default="table")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("oeis", help="cross-check against published sequences")
    oeis_sub = p.add_subparsers(dest="oeis_command", required=True)
    v = oeis_sub.add_parser("verify", help="compare solver output with cached/fetched b-files")
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--count", type=int, default=10, help="terms per role (default 10)")
    v.add_argument("--offline", action="store_true", help="forbid network; cache only")
    v.add_argument("--cache-dir", default=None, help=f"cache directory (or ${'{'}TRIMUL_OEIS_CACHE{'}'})")
    v.add_argument("--format", choices=FORMATS, default="table")
    v.set_defaults(func=cmd_oeis_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("residues", "classify") and (args.k is None) == (args.range is None):
        return _fail("give exactly one of K or --range A..B", EXIT_VALIDATION)
    return args.func(args)


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
