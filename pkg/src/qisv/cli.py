"""Command line front end.

    qisv complete --seq 2,3,5,6,8 --n 9
    qisv verify diagram --which tilde --k 2 --n 5
    qisv verify map --map curran --k 3 --n 8
    qisv verify closure --k 2 --n 4
    qisv verify beta-consistency --k 2 --n 5
    qisv report --max-n 9 --out cert.json

``verify`` exits with 0 (verified), 1 (not_verified) or 2 (inconclusive);
with ``--strict`` any non-verified outcome exits with 3. Usage errors exit
with 64. The log level is read from QISV_LOG (default WARNING).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from .algebra import AlgebraError
from .certificate import build_certificate, check_closure
from .classical import IncreasingSequence, SequenceError, complete
from .models import beta_consistency
from .morphisms import MAPS, CheckReport, Status, check_well_defined, diagram_dot, diagram_tilde

EXIT_USAGE = 64
EXIT_CODES = {Status.VERIFIED: 0, Status.NOT_VERIFIED: 1, Status.INCONCLUSIVE: 2}
EXIT_STRICT = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _seq(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qisv", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("complete", help="complete an increasing sequence to a permutation")
    c.add_argument("--seq", type=_seq, required=True, help="strictly increasing values, e.g. 2,3,5")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--format", choices=("text", "json"), default="text")

    v = sub.add_parser("verify", help="run one check")
    v.add_argument("kind", choices=("map", "diagram", "closure", "beta-consistency"))
    v.add_argument("--k", type=int)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--map", choices=sorted(MAPS), dest="map_name")
    v.add_argument("--which", choices=("tilde", "dot"))
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--strict", action="store_true")
    v.add_argument("--jobs", type=int, default=1, help="accepted for symmetry with report")

    r = sub.add_parser("report", help="induction certificate over 4 <= n <= max-n")
    r.add_argument("--max-n", type=int, default=9)
    r.add_argument("--out", help="write the JSON certificate here")
    r.add_argument("--format", choices=("text", "json"), default="text")
    r.add_argument("--jobs", type=int, default=1)
    r.add_argument("--strict", action="store_true")
    return p


def _need_k(args) -> int:
    if args.k is None:
        raise UsageError("--k is required for this check")
    return args.k


def run_verify(args) -> CheckReport:
    n = args.n
    if args.kind == "map":
        if args.map_name is None:
            raise UsageError("verify map needs --map")
        k = args.k if args.map_name in ("q", "q-bar") else _need_k(args)
        return check_well_defined(MAPS[args.map_name](k, n), k=k, n=n)
    if args.kind == "diagram":
        if args.which is None:
            raise UsageError("verify diagram needs --which tilde|dot")
        k = _need_k(args)
        if not (1 <= k <= n - 1 and n >= 2):
            raise UsageError(f"diagrams need 1 <= k <= n-1, got k={k}, n={n}")
        return diagram_tilde(k, n) if args.which == "tilde" else diagram_dot(k, n)
    k = _need_k(args)
    if args.kind == "closure":
        if not 1 <= k <= n - 1:
            raise UsageError(f"closure needs 1 <= k <= n-1, got k={k}, n={n}")
        return check_closure(k, n)
    if not 0 <= k <= n:
        raise UsageError(f"beta-consistency needs 0 <= k <= n, got k={k}, n={n}")
    return beta_consistency(k, n)


def _exit_code(status: Status, strict: bool) -> int:
    if strict and status is not Status.VERIFIED:
        return EXIT_STRICT
    return EXIT_CODES[status]


def _print_report(report: CheckReport, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report.to_dict(), indent=2))
        return
    print(report.summary())
    for note in report.notes:
        print(f"  note: {note}")
    for w in report.witnesses:
        case = f" {w.case}" if w.case else ""
        print(f"  witness{case}: {w.item}: {w.residual} [{w.channel}]")


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=os.environ.get("QISV_LOG", "WARNING").upper(), format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "complete":
            sigma = complete(IncreasingSequence(args.seq, args.n))
            if args.format == "json":
                print(json.dumps({"one_line": list(sigma.one_line), "cycles": [list(c) for c in sigma.cycles()]}))
            else:
                print(f"one-line: {sigma}")
                print(f"cycles: {sigma.cycle_str()}" + (" (identity)" if not sigma.cycles() else ""))
            return 0
        if args.command == "verify":
            report = run_verify(args)
            _print_report(report, args.format)
            return _exit_code(report.status, args.strict)
        if not 4 <= args.max_n <= 9:
            raise UsageError(f"--max-n must lie in 4..9 (the statement needs n >= 4), got {args.max_n}")
        cert = build_certificate(args.max_n, jobs=max(1, args.jobs))
        if args.out:
            try:
                with open(args.out, "w", encoding="utf-8") as fh:
                    fh.write(cert.to_json())
            except OSError as exc:
                print(f"qisv: cannot write {args.out}: {exc}", file=sys.stderr)
                return 1
        print(cert.to_json() if args.format == "json" else cert.summary(), end="" if args.format == "json" else "\n")
        status = Status.VERIFIED if cert.status == "verified-with-assumptions" else Status(cert.status)
        return _exit_code(status, args.strict)
    except (UsageError, SequenceError, AlgebraError) as exc:
        parser.print_usage(sys.stderr)
        print(f"qisv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
