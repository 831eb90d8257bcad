"""Command-line entry point.

Data goes to stdout (or --out); diagnostics such as node counts and wall
time go to stderr, so the data stream is byte-reproducible across runs and
worker counts. Exit codes: 0 success/PASS, 1 verification FAIL, 2 usage
error, 3 feasibility-cap error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from .bitsets import elements_of
from .covering import is_k_covering, unique_face
from .constructions import (
    cone,
    covering_witness_family,
    full_family,
    hypercube_family,
    initial_segment_family,
    product,
    recursive_family,
)
from .families import (
    FamilyFormatError,
    Parameters,
    SetFamily,
    read_family,
    read_family_json,
    write_family,
    write_family_json,
)
from .oracle import DEFAULT_CAP, FeasibilityError, OracleResult, oracle_D
from .vc import vc_dimension
from .verify import (
    explore,
    lower_bound_certificate,
    monotonicity_scan,
    rows_to_csv,
    stab_upper,
    surjectivity_scan,
    upper_bound_certificate,
    verify_main_theorem,
    verify_prop_const,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3

FORMATS = ("text", "json", "csv")


@dataclass(frozen=True)
class RunConfig:
    """Validated run-wide options shared by the subcommands."""

    out: str | None
    format: str
    cap: int
    workers: int

    def __post_init__(self) -> None:
        if self.workers < 1:
            raise ValueError("worker count must be >= 1")
        if self.cap < 1:
            raise ValueError("cap must be >= 1")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")


def _load_family(path: str) -> SetFamily:
    text = sys.stdin.read() if path == "-" else open(path).read()
    if text.lstrip().startswith("{"):
        return read_family_json(text)
    return read_family(text)


def _emit(config: RunConfig, data: str) -> None:
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data)


def _emit_family(config: RunConfig, fam: SetFamily) -> None:
    if config.format == "json":
        _emit(config, write_family_json(fam) + "\n")
    else:
        _emit(config, write_family(fam))


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the data stream to this file instead of stdout")
    common.add_argument("--format", default="text", choices=FORMATS)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="feasibility cap on the universe size C(n,s) for oracle search")
    common.add_argument("--workers", type=int, default=1,
                        help="worker count for partitioned searches (results are identical for any count)")

    parser = argparse.ArgumentParser(
        prog="vccover",
        description="Exact VC-dimension engine for covering set families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="build a family and emit it canonically")
    csub = construct.add_subparsers(dest="what", required=True)
    p = csub.add_parser("full", parents=[common])
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p = csub.add_parser("segments", parents=[common])
    p.add_argument("-n", type=int, required=True)
    p = csub.add_parser("hypercube", parents=[common])
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p = csub.add_parser("fk", parents=[common])
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p = csub.add_parser("witness", parents=[common])
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p = csub.add_parser("cone", parents=[common])
    p.add_argument("--family", required=True)
    p = csub.add_parser("product", parents=[common])
    p.add_argument("--family", required=True)
    p.add_argument("-l", type=int, required=True)

    check = sub.add_parser("check", help="decide a property, print PASS/FAIL plus witnesses")
    ksub = check.add_subparsers(dest="what", required=True)
    p = ksub.add_parser("covering", parents=[common])
    p.add_argument("--family", required=True)
    p.add_argument("-k", type=int, required=True)
    p = ksub.add_parser("ufp", parents=[common])
    p.add_argument("--family", required=True)

    p = sub.add_parser("vcdim", parents=[common], help="exact VC-dimension of a family file")
    p.add_argument("--family", required=True)

    p = sub.add_parser("oracle", parents=[common],
                       help="exact minimum VC-dimension over covering families")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--fallback-enum", action="store_true",
                   help="use the power-set enumeration oracle instead of branch-and-bound")

    verify = sub.add_parser("verify", help="run a verification and exit 0 on PASS")
    vsub = verify.add_subparsers(dest="what", required=True)
    p = vsub.add_parser("prop-const", parents=[common])
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p = vsub.add_parser("certificate", parents=[common])
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--witness-out", help="also write the upper-bound witness family here")
    p = vsub.add_parser("main", parents=[common])
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-s", type=int, required=True)

    p = sub.add_parser("explore", parents=[common],
                       help="emit an exploration table over a range of ground sizes")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("-n", required=True, help="ground size or inclusive range LO:HI")
    return parser


def _parse_n_range(text: str) -> range:
    if ":" in text:
        lo, hi = text.split(":", 1)
        return range(int(lo), int(hi) + 1)
    v = int(text)
    return range(v, v + 1)


def _run_construct(args: argparse.Namespace, config: RunConfig) -> int:
    if args.what == "full":
        fam = full_family(args.n, args.s)
    elif args.what == "segments":
        fam = initial_segment_family(args.n)
    elif args.what == "hypercube":
        fam = hypercube_family(args.k, args.m)
    elif args.what == "fk":
        fam = recursive_family(args.m, args.k)
    elif args.what == "witness":
        fam = covering_witness_family(args.k, args.s, args.n)
    elif args.what == "cone":
        fam = cone(_load_family(args.family))
    else:
        fam = product(_load_family(args.family), args.l)
    _emit_family(config, fam)
    return EXIT_OK


def _run_check(args: argparse.Namespace, config: RunConfig) -> int:
    fam = _load_family(args.family)
    if args.what == "covering":
        report = is_k_covering(fam, args.k)
        if config.format == "json":
            _emit(config, json.dumps(report.as_dict()) + "\n")
        elif report.holds:
            _emit(config, "PASS\n")
        else:
            witness = " ".join(str(e) for e in elements_of(report.uncovered))
            _emit(config, f"FAIL uncovered: {witness}\n")
        return EXIT_OK if report.holds else EXIT_FAIL
    report = unique_face(fam)
    if config.format == "json":
        _emit(config, json.dumps(report.as_dict()) + "\n")
    elif report.holds:
        _emit(config, "PASS\n")
    else:
        witness = " ".join(str(e) for e in elements_of(report.violator))
        _emit(config, f"FAIL violator: {witness}\n")
    return EXIT_OK if report.holds else EXIT_FAIL


def _run_vcdim(args: argparse.Namespace, config: RunConfig) -> int:
    fam = _load_family(args.family)
    report = vc_dimension(fam, workers=config.workers)
    if config.format == "json":
        _emit(config, json.dumps(report.as_dict()) + "\n")
    else:
        _emit(config, f"{report.dimension}\n")
    return EXIT_OK


def _oracle_text(result: OracleResult) -> str:
    return f"{result.value}\n" + write_family(result.witness)


def _run_oracle(args: argparse.Namespace, config: RunConfig) -> int:
    params = Parameters(args.k, args.s, args.n)
    method = "exhaustive" if args.fallback_enum else "branch-and-bound"
    if args.cap_overridden:
        print(f"warning: feasibility cap overridden to {config.cap}", file=sys.stderr)
    start = time.perf_counter()
    result = oracle_D(params, cap=config.cap, workers=config.workers, method=method)
    elapsed = time.perf_counter() - start
    print(f"nodes={result.nodes_explored} time={elapsed:.3f}s", file=sys.stderr)
    if config.format == "json":
        _emit(config, json.dumps(result.as_dict(include_stats=False)) + "\n")
    else:
        _emit(config, _oracle_text(result))
    return EXIT_OK


def _run_verify(args: argparse.Namespace, config: RunConfig) -> int:
    lines: list[str] = []
    if args.what == "prop-const":
        report = verify_prop_const(args.m, args.k)
        payload = report.as_dict()
        for item, ok in payload["items"].items():
            lines.append(f"{item}: {'PASS' if ok else 'FAIL'}")
        lines.append("PASS" if report.passed else "FAIL")
        passed = report.passed
    elif args.what == "certificate":
        lower = lower_bound_certificate(args.k, args.s, args.n)
        upper = upper_bound_certificate(
            args.k, args.s, args.n, witness_path=args.witness_out, workers=config.workers
        )
        payload = {"lower": lower.as_dict(), "upper": upper.as_dict()}
        lines.append(
            f"lower {lower.inequality_lhs} < {lower.inequality_rhs}: "
            f"{'HOLDS' if lower.holds else 'FAILS'} "
            f"(sufficient inequality: {lower.sufficient_inequality_holds})"
        )
        lines.append(
            f"upper witness vc {upper.inequality_lhs} <= {upper.inequality_rhs}: "
            f"{'HOLDS' if upper.holds else 'FAILS'}"
        )
        passed = lower.holds and upper.holds
        lines.append("PASS" if passed else "FAIL")
    else:
        report = verify_main_theorem(args.k, args.s, workers=config.workers)
        payload = report.as_dict()
        lines.append(f"n = {report.n}")
        lines.append(f"certificate: {'PASS' if report.certificate.holds else 'FAIL'}")
        lines.append(f"witness covering: {'PASS' if report.witness_covering else 'FAIL'}")
        lines.append(f"witness vc = {report.witness_vc}")
        lines.append("PASS" if report.passed else "FAIL")
        passed = report.passed
    if config.format == "json":
        _emit(config, json.dumps(payload) + "\n")
    else:
        _emit(config, "".join(line + "\n" for line in lines))
    return EXIT_OK if passed else EXIT_FAIL


def _run_explore(args: argparse.Namespace, config: RunConfig) -> int:
    rows = explore(args.k, args.s, _parse_n_range(args.n), cap=config.cap, workers=config.workers)
    if config.format == "json":
        payload = {
            "rows": [
                {"k": r.k, "s": r.s, "n": r.n, "lower": r.lower, "upper": r.upper,
                 "exact": r.exact, "method": r.method}
                for r in rows
            ],
            "stab_upper_hint": stab_upper(rows),
            "non_monotone_pairs": monotonicity_scan(rows),
            "attained_values": sorted(surjectivity_scan(rows)),
        }
        _emit(config, json.dumps(payload) + "\n")
    else:
        _emit(config, rows_to_csv(rows))
        hint = stab_upper(rows)
        print(f"stab_upper_hint={hint}", file=sys.stderr)
        drops = monotonicity_scan(rows)
        if drops:
            print(f"non-monotone pairs: {drops}", file=sys.stderr)
        print(f"attained values: {sorted(surjectivity_scan(rows))}", file=sys.stderr)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    raw = sys.argv[1:] if argv is None else list(argv)
    parser = _build_parser()
    args = parser.parse_args(raw)
    args.cap_overridden = any(a == "--cap" or a.startswith("--cap=") for a in raw)
    try:
        config = RunConfig(out=args.out, format=args.format, cap=args.cap, workers=args.workers)
        if args.command == "construct":
            return _run_construct(args, config)
        if args.command == "check":
            return _run_check(args, config)
        if args.command == "vcdim":
            return _run_vcdim(args, config)
        if args.command == "oracle":
            return _run_oracle(args, config)
        if args.command == "verify":
            return _run_verify(args, config)
        return _run_explore(args, config)
    except FeasibilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, FamilyFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
