"""Command-line front end.

Results go to stdout, diagnostics to stderr. Exit status is 0 whenever
the computation finished (whatever the verdict), 2 for usage errors and
3 when a verifier rejects an object the tool built.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence

from . import __version__
from .certify import VerificationFailure, certify, cross_check_report
from .erdoswoods import min_interval_start
from .numtheory import primes_below
from .partition import (
    ORACLE_MAX_PRIMES,
    contradiction_chain,
    is_prime_partitionable,
)

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 2, 3

WRONG_LIST = [16, 22, 34, 36, 46, 52, 56, 64, 66, 70]


class UsageError(Exception):
    pass


def _default_jobs() -> int:
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:  # not on Linux
        return os.cpu_count() or 1


def _fan_out(func: Callable, items: Sequence[int], jobs: int) -> list:
    """``[func(x) for x in items]``, optionally across processes, in input order."""
    if jobs <= 1 or len(items) < 2:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, items, chunksize=max(1, len(items) // (4 * jobs))))


def _check_oracle_bound(n: int) -> None:
    k = len(primes_below(n))
    if k > ORACLE_MAX_PRIMES:
        raise UsageError(
            f"--oracle: {n} has {k} primes below it; the exhaustive cutoff is {ORACLE_MAX_PRIMES}"
        )


def _decide_plain(n: int) -> bool:
    return is_prime_partitionable(n)


def _decide_oracle(n: int) -> bool:
    return is_prime_partitionable(n, oracle=True)


def _emit(args, text_lines: Iterable[str], data) -> None:
    if args.format == "json":
        print(json.dumps(data))
    else:
        for line in text_lines:
            print(line)


# subcommands ---------------------------------------------------------------


def cmd_enumerate(args) -> int:
    if args.oracle:
        _check_oracle_bound(args.limit)
    candidates = list(range(4, args.limit + 1))
    decide = _decide_oracle if args.oracle else _decide_plain
    flags = _fan_out(decide, candidates, args.jobs)
    found = [n for n, ok in zip(candidates, flags) if ok]
    _emit(args, map(str, found), found)
    return EXIT_OK


def cmd_check(args) -> int:
    if args.oracle:
        _check_oracle_bound(args.n)
    verdict = is_prime_partitionable(args.n, oracle=args.oracle)
    _emit(args, ["yes" if verdict else "no"], {"n": args.n, "prime_partitionable": verdict})
    return EXIT_OK


def cmd_certify(args) -> int:
    if args.n < 4:
        raise UsageError(f"certify needs N >= 4, got {args.n}")
    if args.oracle:
        _check_oracle_bound(args.n)
    status = EXIT_OK
    try:
        cert = certify(args.n, oracle=args.oracle)
    except VerificationFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        cert, status = exc.certificate, EXIT_VERIFY
    if args.out:
        Path(args.out).write_text(cert.to_json(), encoding="utf-8")
    passed = sum(ok for _, ok in cert.checks)
    lines = [f"n = {cert.n}: {cert.verdict}"]
    if cert.partition is not None:
        lines.append(f"partition: {cert.partition}")
        lines.append(f"witness: d={cert.witness.d} n1={cert.witness.n1} n2={cert.witness.n2}")
        lines.append(f"interval: [{cert.interval.e1}, {cert.interval.e2}]")
    elif isinstance(cert.refutation, list):
        lines.append(f"refutation: {len(cert.refutation)}-step chain")
        lines.extend(f"  {step.describe()}" for step in cert.refutation)
    else:
        lines.append("refutation: exhaustive search")
    lines.append(f"checks: {passed}/{len(cert.checks)} passed")
    if args.out:
        lines.append(f"written to {args.out}")
    if args.format == "json" and not args.out:
        print(cert.to_json(), end="")
    else:
        _emit(args, lines, cert.to_dict())
    return status


def cmd_corrigendum(args) -> int:
    limit = 100
    decide = _decide_oracle if args.oracle else _decide_plain
    candidates = list(range(4, limit + 1))
    flags = _fan_out(decide, candidates, args.jobs)
    corrected = [n for n, ok in zip(candidates, flags) if ok]
    wrong = [n for n in WRONG_LIST if n not in corrected]
    chain = contradiction_chain(52)
    steps = [
        {"kind": s.kind, "primes": list(s.primes), "decomposition": [s.decomposition.n1, s.decomposition.n2]}
        for s in chain or []
    ]
    lines = [
        "prime partitionable numbers up to 100:",
        " ".join(map(str, corrected)),
        f"wrongly listed: {' '.join(map(str, wrong)) or 'none'}",
        "52 is not prime partitionable:",
    ]
    lines.extend(f"  {i}. {s.describe()}" for i, s in enumerate(chain or [], 1))
    if chain:
        lines.append("  contradiction")
    else:
        lines.append("  refuted by exhaustive search")
    data = {"limit": limit, "corrected": corrected, "excluded": wrong, "chain_52": steps}
    _emit(args, lines, data)
    return EXIT_OK


def cmd_ew_min(args) -> int:
    if args.w < 1:
        raise UsageError(f"W must be >= 1, got {args.w}")
    if args.bound < 2:
        raise UsageError(f"--bound must be >= 2, got {args.bound}")
    start = min_interval_start(args.w, args.bound)
    text = str(start) if start is not None else "none within bound"
    _emit(args, [text], {"w": args.w, "bound": args.bound, "e1": start})
    return EXIT_OK


def _cross(n_and_bound: tuple[int, int]):
    n, bound = n_and_bound
    return cross_check_report(n, bound)


def cmd_cross_check(args) -> int:
    candidates = [(n, args.scan_bound) for n in range(4, args.limit + 1)]
    reports = _fan_out(_cross, candidates, args.jobs)
    failures = [r for r in reports if not r.agree]
    lines = [
        f"n={r.n}: partition={r.by_partition} witness={r.by_witness} "
        f"interval={r.by_interval} scan={r.scanned_start} scan_ok={r.scan_consistent}"
        for r in failures
    ]
    lines.append(f"checked {len(reports)} values, {len(failures)} failures")
    data = {
        "limit": args.limit,
        "checked": len(reports),
        "failures": [
            {"n": r.n, "partition": r.by_partition, "witness": r.by_witness, "interval": r.by_interval}
            for r in failures
        ],
    }
    _emit(args, lines, data)
    return EXIT_VERIFY if failures else EXIT_OK


# parsing -------------------------------------------------------------------


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return value


def _jobs(text: str) -> int:
    value = _positive_int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("--jobs must be at least 1")
    return value


def _add_globals(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--jobs", type=_jobs, default=default(_default_jobs()), metavar="K",
                        help="worker processes (default: available CPUs)")
    parser.add_argument("--oracle", action="store_true", default=default(False),
                        help="decide by exhaustive enumeration (small n only)")
    parser.add_argument("--format", choices=("text", "json"), default=default("text"))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="primepart", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", help="list prime partitionable numbers up to a limit")
    p.add_argument("--limit", type=_positive_int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", help="decide one integer")
    p.add_argument("n", type=_positive_int, metavar="N")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("certify", help="write a verified certificate for one integer")
    p.add_argument("n", type=_positive_int, metavar="N")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("corrigendum", help="corrected list up to 100 and the refutation of 52")
    p.set_defaults(func=cmd_corrigendum)

    p = sub.add_parser("ew-min", help="smallest start of an Erdos-Woods interval of width W")
    p.add_argument("w", type=_positive_int, metavar="W")
    p.add_argument("--bound", type=_positive_int, required=True)
    p.set_defaults(func=cmd_ew_min)

    p = sub.add_parser("cross-check", help="compare the three characterizations up to a limit")
    p.add_argument("--limit", type=_positive_int, required=True)
    p.add_argument("--scan-bound", type=_positive_int, default=0,
                   help="also brute-force interval starts up to this bound")
    p.set_defaults(func=cmd_cross_check)

    for action in sub.choices.values():
        _add_globals(action, suppress=True)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"primepart: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
