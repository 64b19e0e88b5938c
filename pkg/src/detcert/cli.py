"""Command-line interface: ``detcert {analyze,transform,search,convert}``.

Exit codes: 0 success (analyze: necessary condition holds), 3 analyze proved
non-maximality, 2 singular input, 1 identity check failed, 64 usage error,
65 malformed matrix file, 74 I/O error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import __version__
from .errors import DetcertError, OrderTooLarge, ParseError, SingularMatrix
from .exact import Matrix01, MatrixPM1, det_exact
from .matio import KINDS, parse_matrix, serialize_matrix
from .report import build_report, report_json, report_text
from .search import brute_force_g, brute_force_h, default_workers
from .transform import pm1_to_01, zero_one_to_pm1

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_SINGULAR = 2
EXIT_NOT_MAXIMAL = 3
EXIT_USAGE = 64
EXIT_DATAERR = 65
EXIT_IOERR = 74

log = logging.getLogger("detcert")


class UsageError(Exception):
    pass


class _IOFailure(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path, kind, mode, stdin):
    try:
        if path == "-":
            data = stdin.buffer.read() if hasattr(stdin, "buffer") else stdin.read()
        else:
            with open(path, "rb") as fh:
                data = fh.read()
    except OSError as exc:
        raise _IOFailure(f"cannot read {path}: {exc.strerror or exc}") from None
    return parse_matrix(data, kind, mode)


def _write(path, data: bytes, stdout):
    if path is None or path == "-":
        if hasattr(stdout, "buffer"):
            stdout.flush()
            stdout.buffer.write(data)
            stdout.buffer.flush()
        else:
            stdout.write(data.decode("ascii"))
        return
    try:
        with open(path, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise _IOFailure(f"cannot write {path}: {exc.strerror or exc}") from None


def _grid(m) -> str:
    if isinstance(m, MatrixPM1):
        return serialize_matrix(m, "gridpm").decode("ascii")
    return serialize_matrix(m, "grid01").decode("ascii")


def cmd_analyze(args, stdout):
    m = _read(args.input, args.format, args.pbm_mode, sys.stdin)
    report = build_report(m)
    stdout.write(report_json(report) if args.json else report_text(report))
    if report["verdict"]["kind"] == "NotMaximal":
        return EXIT_NOT_MAXIMAL
    return EXIT_OK


def cmd_transform(args, stdout):
    if args.direction == "pm1-to-01":
        in_kind = args.format or "gridpm"
        out_kind = args.output_format or "grid01"
        u = _read(args.input, in_kind, "pm1", sys.stdin)
        if not isinstance(u, MatrixPM1):
            raise UsageError("pm1-to-01 needs a +-1 input (gridpm, or pbm)")
        t = pm1_to_01(u)
        n = t.order
        det_big, det_small = det_exact(u), det_exact(t)
        result = t
    else:
        in_kind = args.format or "grid01"
        out_kind = args.output_format or "gridpm"
        t = _read(args.input, in_kind, "01", sys.stdin)
        if not isinstance(t, Matrix01):
            raise UsageError("01-to-pm1 needs a 0/1 input (grid01, or pbm)")
        v = zero_one_to_pm1(t)
        n = t.order
        det_big, det_small = det_exact(v), det_exact(t)
        result = v
    try:
        data = serialize_matrix(result, out_kind)
    except ValueError as exc:
        raise UsageError(f"cannot write result as {out_kind}: {exc}") from None
    _write(args.output, data, stdout)
    lhs = 2**n * abs(det_small)
    holds = lhs == abs(det_big)
    stream = sys.stderr if args.output in (None, "-") else stdout
    stream.write(
        f"direction\t{args.direction}\n"
        f"pm1_order\t{n + 1}\tdet\t{det_big}\n"
        f"01_order\t{n}\tdet\t{det_small}\n"
        f"2^{n}*|det 01|\t{lhs}\n"
        f"|det pm1|\t{abs(det_big)}\n"
        f"holds\t{str(holds).lower()}\n"
    )
    return EXIT_OK if holds else EXIT_CHECK_FAILED


def cmd_search(args, stdout):
    workers = args.workers if args.workers is not None else default_workers()
    if args.kind == "01":
        res = brute_force_h(args.order, workers, allow_order_6=args.allow_order_6)
    else:
        res = brute_force_g(args.order, workers)
    if args.json:
        doc = {
            "order": res.order,
            "kind": res.kind,
            "max_abs_det": str(res.max_abs_det),
            "count_maximizers": res.count_maximizers,
            "enumerated": res.enumerated,
            "witness": _grid(res.witness).splitlines(),
            "tool_version": __version__,
        }
        stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        stdout.write(
            f"kind\t{res.kind}\n"
            f"order\t{res.order}\n"
            f"max_abs_det\t{res.max_abs_det}\n"
            f"count_maximizers\t{res.count_maximizers}\n"
            f"enumerated\t{res.enumerated}\n"
            "witness\n" + _grid(res.witness)
        )
    return EXIT_OK


def cmd_convert(args, stdout):
    mode = args.pbm_mode
    if args.from_kind == "grid01":
        mode = "01"
    elif args.from_kind == "gridpm":
        mode = "pm1"
    m = _read(args.input, args.from_kind, mode, sys.stdin)
    try:
        data = serialize_matrix(m, args.to_kind)
    except ValueError as exc:
        raise UsageError(f"cannot convert {args.from_kind} to {args.to_kind}: {exc}") from None
    _write(args.output, data, stdout)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="detcert", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"detcert {__version__}")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="row-sum certificate, axial diameters, alpha and xi")
    a.add_argument("--input", "-i", required=True, help="matrix file, or - for stdin")
    a.add_argument("--format", "-f", choices=KINDS, default="grid01")
    a.add_argument("--pbm-mode", choices=("01", "pm1"), default="01",
                   help="how white PBM pixels are read (0 or -1)")
    out = a.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true")
    out.add_argument("--text", action="store_true", help="tab-delimited text (default)")
    a.set_defaults(func=cmd_analyze)

    t = sub.add_parser("transform", help="+-1 <-> 0/1 procedure with determinant check")
    t.add_argument("--input", "-i", required=True)
    t.add_argument("--direction", "-d", required=True, choices=("pm1-to-01", "01-to-pm1"))
    t.add_argument("--output", "-o", required=True, help="output file, or - for stdout")
    t.add_argument("--format", "-f", choices=KINDS, help="input format")
    t.add_argument("--output-format", choices=KINDS, help="output format")
    t.set_defaults(func=cmd_transform)

    s = sub.add_parser("search", help="exhaustive maximum |det| at small order")
    s.add_argument("--kind", "-k", required=True, choices=("01", "pm1"))
    s.add_argument("--order", "-n", required=True, type=int)
    s.add_argument("--workers", "-w", type=int, help="default: $DETCERT_WORKERS or 1")
    s.add_argument("--allow-order-6", action="store_true",
                   help="permit the (slow) order-6 0/1 search")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_search)

    c = sub.add_parser("convert", help="convert between grid01, gridpm and pbm")
    c.add_argument("--input", "-i", required=True)
    c.add_argument("--from", dest="from_kind", required=True, choices=KINDS)
    c.add_argument("--to", dest="to_kind", required=True, choices=KINDS)
    c.add_argument("--output", "-o")
    c.add_argument("--pbm-mode", choices=("01", "pm1"), default="01")
    c.set_defaults(func=cmd_convert)
    return p


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        return args.func(args, stdout)
    except SingularMatrix as exc:
        print(f"detcert: singular matrix: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except ParseError as exc:
        print(f"detcert: parse error: {exc}", file=sys.stderr)
        return EXIT_DATAERR
    except (UsageError, OrderTooLarge) as exc:
        print(f"detcert: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _IOFailure as exc:
        print(f"detcert: {exc}", file=sys.stderr)
        return EXIT_IOERR
    except (DetcertError, ValueError) as exc:
        print(f"detcert: {exc}", file=sys.stderr)
        return EXIT_DATAERR


if __name__ == "__main__":
    sys.exit(main())
