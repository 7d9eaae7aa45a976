"""
Command-line interface.

    pin2floer compute --brieskorn 2,3,7
    pin2floer compare --brieskorn 5,7,13 --brieskorn 7,10,17
    pin2floer family 2,5,20k+11 --k 1..3 --format md
    pin2floer oracle-check --cases 50 --seed 7

Exit codes: 0 success (including any compare verdict), 2 input error,
3 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import logging
import shlex
import sys
from concurrent.futures import ProcessPoolExecutor

from . import report as rp
from .chain import check
from .errors import InputError, Pin2Error
from .modules import pretty
from .pipeline import compare, compute_swfhg
from .seifert import analyze, analyze_brieskorn

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_MISMATCH = 3


def _add_sources(p: argparse.ArgumentParser) -> None:
    p.add_argument("--brieskorn", action="append", default=[], metavar="A,B,C",
                   help="Brieskorn sphere by its fiber orders")
    p.add_argument("--seifert", action="append", default=[], metavar="FILE",
                   help='JSON file (or inline JSON) with {"brieskorn": [...]} or {"seifert": {...}}')
    p.add_argument("--hf", action="append", default=[], metavar="JSON",
                   help="HF decomposition {s, pairs, J}, inline or a file path")


def _sources(args) -> list[rp.Source]:
    out = [rp.Source("brieskorn", rp.parse_triple(t)) for t in args.brieskorn]
    out += [rp.source_from_seifert_json(rp._load_json(t)) for t in args.seifert]
    out += [rp.source_from_hf(t) for t in args.hf]
    return out


def _emit(reports: list[dict], fmt: str, single: bool) -> str:
    if fmt == "md":
        return rp.to_markdown(reports)
    if fmt == "csv":
        return rp.to_csv(reports)
    return rp.to_json(reports[0] if single else reports)


def cmd_compute(args) -> int:
    srcs = _sources(args)
    if len(srcs) != 1:
        raise InputError(f"compute needs exactly one input, got {len(srcs)}")
    sys.stdout.write(_emit([rp.build_report(srcs[0])], args.format, True))
    return EXIT_OK


def _decomposition(src: rp.Source):
    if src.kind == "hf":
        return src.value
    res = analyze_brieskorn(src.value) if src.kind == "brieskorn" else analyze(src.value)
    return res.decomposition


def cmd_compare(args) -> int:
    srcs = _sources(args)
    if len(srcs) != 2:
        raise InputError(f"compare needs exactly two inputs, got {len(srcs)}")
    reports = [rp.build_report(s) for s in srcs]
    cmp = compare(*(_decomposition(s) for s in srcs))
    out = {"inputs": [r["label"] for r in reports], **cmp.to_json(),
           "invariants": [r["invariants"] for r in reports],
           "local_class": [r["local_class"]["text"] for r in reports]}
    if args.format == "json":
        sys.stdout.write(rp.to_json(out))
    else:
        sys.stdout.write(f"{out['inputs'][0]} vs {out['inputs'][1]}: {out['verdict']}")
        if out["differences"]:
            sys.stdout.write(" (differ in " + ", ".join(out["differences"]) + ")")
        sys.stdout.write("\n" + _emit(reports, args.format, False))
    return EXIT_OK


def cmd_family(args) -> int:
    pattern = rp.FamilyPattern.parse(args.pattern)
    reports = rp.family_reports(pattern, rp.parse_k_range(args.k))
    sys.stdout.write(_emit(reports, args.format, False))
    return EXIT_OK


def _run_case(job):
    dec, max_degree = job
    return check.check_decomposition(dec, max_degree)


def _repro(dec, max_degree: int) -> str:
    return f"pin2floer oracle-check --hf {shlex.quote(json.dumps(dec.to_json()))} --max-degree {max_degree}"


def cmd_oracle_check(args) -> int:
    if args.hf:
        decs = [rp.source_from_hf(t).value for t in args.hf]
    else:
        if args.cases < 1:
            raise InputError("--cases must be at least 1")
        decs = check.seeded_cases(args.cases, args.seed)
    jobs = [(dec, args.max_degree) for dec in decs]
    if args.jobs == 1 or len(jobs) == 1:
        results = [_run_case(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_case, jobs))
    failed = 0
    for i, res in enumerate(results):
        dec = res.dec
        head = f"case {i}: s={rp._num(dec.s)} pairs={list(dec.pairs)} J={pretty(dec.J)}"
        if res.ok:
            print(f"{head} ok  SWFH^G={pretty(compute_swfhg(dec).base)}")
        else:
            failed += 1
            print(f"{head} MISMATCH")
            for m in res.mismatches:
                print(f"    {m}")
            print(f"    reproduce: {_repro(dec, args.max_degree)}")
    print(f"{len(results) - failed}/{len(results)} cases passed through degree {args.max_degree}")
    return EXIT_OK if failed == 0 else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pin2floer", description=__doc__.split("\n\n")[0].strip())
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="full report for one input")
    _add_sources(p)
    p.add_argument("--format", choices=("json", "md", "csv"), default="json")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("compare", help="homology cobordism obstruction between two inputs")
    _add_sources(p)
    p.add_argument("--format", choices=("json", "md", "csv"), default="json")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("family", help="sweep a Brieskorn family such as 2,5,20k+11")
    p.add_argument("pattern")
    p.add_argument("--k", default="1..3", metavar="LO..HI")
    p.add_argument("--format", choices=("json", "md", "csv"), default="md")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("oracle-check", help="compare the pipeline with chain-level Borel homology")
    p.add_argument("--cases", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-degree", type=int, default=40)
    p.add_argument("--hf", action="append", default=[], metavar="JSON",
                   help="check these decompositions instead of random ones")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
    p.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    if args.command == "oracle-check" and not args.hf and args.cases < 1:
        parser.error("--cases must be at least 1")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Pin2Error as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
