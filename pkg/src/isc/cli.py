"""Command-line front end: ``isc params|encode|decode|corrupt|bounds|experiment|enumerate``.

Exit codes: 0 success, 2 decode failure, 3 encoding rejection,
4 invalid parameters, flags or file format.
"""

import argparse
import json
import re
import sys
from pathlib import Path

from .bounds import bounds_report, reports_to_csv
from .channel import corrupt, count_indexed_outputs, enumerate_outputs, is_indexed, pattern_count
from .codec import IndexedSet, ReceivedSet, decode, encode
from .errors import DecodeFailure, EncodingRejection, FormatError, GuardExceeded, ParameterError
from .experiment import run_experiment
from .formats import dump_set, load_set
from .params import params_derive
from .rng import XorShift64Star

EXIT_OK, EXIT_DECODE, EXIT_REJECT, EXIT_INVALID = 0, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _code_flags(p, required=True):
    for name in ("M", "L", "l", "t", "e1", "e2"):
        p.add_argument(f"--{name}", type=int, required=required)


def _params(args, seed=1):
    return params_derive(args.M, args.L, args.l, args.t, args.e1, args.e2, seed)


def _emit(text, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _read_set(path):
    return load_set(Path(path).read_text())


def cmd_params(args):
    p = _params(args, args.seed)
    _emit(json.dumps(p.to_dict(), indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_encode(args):
    p = _params(args, args.seed)
    payload = Path(args.input).read_bytes()
    s = encode(payload, p)
    _emit(dump_set(s.lines(), p, len(payload)), args.out)
    return EXIT_OK


def cmd_decode(args):
    p, nbytes, strands = _read_set(args.input)
    payload = decode(ReceivedSet.of(strands, p.L), p, nbytes)
    if args.out:
        Path(args.out).write_bytes(payload)
    else:
        sys.stdout.buffer.write(payload)
    return EXIT_OK


def cmd_corrupt(args):
    p, nbytes, strands = _read_set(args.input)
    try:
        s = IndexedSet.from_strands(strands, p.L)
    except ValueError as exc:
        raise FormatError(f"input is not an indexed set: {exc}") from None
    received, pattern = corrupt(s, p, args.seed)
    _emit(dump_set(received.lines(), p, nbytes), args.out)
    if args.out:
        Path(args.out + ".pattern.json").write_text(pattern.to_json() + "\n")
    return EXIT_OK


_SWEEP = re.compile(r"(M|L|l|t|e1|e2)=(\d+)\.\.(\d+):([*+])(\d+)")


def _sweep_values(spec):
    m = _SWEEP.fullmatch(spec)
    if m is None:
        raise UsageError(f"bad --sweep {spec!r}; expected e.g. M=16..65536:*4")
    name, lo, hi, op, step = m.group(1), int(m.group(2)), int(m.group(3)), m.group(4), int(m.group(5))
    if (op == "*" and step < 2) or (op == "+" and step < 1):
        raise UsageError("sweep step must make progress")
    vals, v = [], lo
    while v <= hi:
        vals.append(v)
        v = v * step if op == "*" else v + step
    return name, vals


def cmd_bounds(args):
    base = {k: getattr(args, k) for k in ("M", "L", "l", "t", "e1", "e2")}
    if args.sweep:
        name, vals = _sweep_values(args.sweep)
        points = [dict(base, **{name: v}) for v in vals]
    else:
        points = [base]
    missing = [k for k, v in points[0].items() if v is None]
    if missing:
        raise UsageError("missing flags: " + ", ".join("--" + k for k in missing))
    reports = [bounds_report(**pt) for pt in points]
    fmt = args.format or ("csv" if args.sweep else "json")
    if fmt == "csv":
        _emit(reports_to_csv(reports), args.out)
    elif args.sweep:
        _emit(json.dumps([r.to_dict() for r in reports], indent=2) + "\n", args.out)
    else:
        _emit(json.dumps(reports[0].to_dict(), indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_experiment(args):
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    p = _params(args, args.code_seed)
    report = run_experiment(p, args.trials, args.seed, workers=args.workers)
    _emit(json.dumps(report.to_dict(), indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_enumerate(args):
    if args.input:
        p, nbytes, strands = _read_set(args.input)
        try:
            sets = [(IndexedSet.from_strands(strands, p.L), None)]
        except ValueError as exc:
            raise FormatError(f"input is not an indexed set: {exc}") from None
    else:
        if None in (args.M, args.L, args.l, args.t, args.e1, args.e2):
            raise UsageError("give --in or all of --M --L --l --t --e1 --e2")
        p = _params(args, args.code_seed)
        rng = XorShift64Star(args.seed)
        sets, attempts = [], 0
        while len(sets) < args.trials and attempts < 1000 * args.trials:
            attempts += 1
            payload = rng.random_bytes(p.capacity_bits // 8)
            try:
                sets.append((encode(payload, p), payload))
            except EncodingRejection:
                pass
        nbytes = p.capacity_bits // 8
    summary = {"codewords": len(sets), "patterns_per_codeword": pattern_count(p),
               "distinct_outputs": 0, "indexed_outputs": 0}
    if args.check_decode:
        summary.update(passed=0, failed=0)
    for s, payload in sets:
        if payload is None and args.check_decode:
            payload = decode(s.received(), p, nbytes)
        for r in enumerate_outputs(s, p):
            summary["distinct_outputs"] += 1
            summary["indexed_outputs"] += is_indexed(r, p)
            if args.check_decode:
                try:
                    ok = decode(r, p, nbytes) == payload
                except DecodeFailure:
                    ok = False
                summary["passed" if ok else "failed"] += 1
    _emit(json.dumps(summary, indent=2) + "\n", args.out)
    if args.check_decode:
        print(f"pass={summary['passed']} fail={summary['failed']}", file=sys.stderr)
        return EXIT_OK if summary["failed"] == 0 else EXIT_DECODE
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="isc", description="Anchored indexed-set codes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("params", help="derive and validate code parameters")
    _code_flags(p)
    p.add_argument("--seed", type=int, default=1, help="code (scrambler) seed")
    p.add_argument("--out")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("encode", help="encode a payload file into an ISC1 set")
    _code_flags(p)
    p.add_argument("--seed", type=int, default=1, help="code (scrambler) seed")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode an ISC1 set back to payload bytes")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("corrupt", help="pass an ISC1 set through a seeded channel")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p.add_argument("--seed", type=int, default=1, help="channel RNG seed")
    p.set_defaults(func=cmd_corrupt)

    p = sub.add_parser("bounds", help="redundancy bounds (JSON, or CSV sweeps)")
    _code_flags(p, required=False)
    p.add_argument("--sweep")
    p.add_argument("--format", choices=("json", "csv"))
    p.add_argument("--out")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("experiment", help="Monte Carlo encode/channel/decode trials")
    _code_flags(p)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=1, help="master seed")
    p.add_argument("--code-seed", type=int, default=1)
    p.add_argument("--workers", type=int, default=None, help="overrides ISC_THREADS")
    p.add_argument("--out")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("enumerate", help="exhaustive channel outputs of codewords")
    _code_flags(p, required=False)
    p.add_argument("--in", dest="input")
    p.add_argument("--trials", type=int, default=1, help="random codewords when no --in")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--code-seed", type=int, default=1)
    p.add_argument("--check-decode", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"isc: usage error: {exc}", file=sys.stderr)
    except (ParameterError, FormatError, GuardExceeded) as exc:
        print(f"isc: invalid input: {exc}", file=sys.stderr)
    except EncodingRejection as exc:
        print(f"isc: encoding rejected: {exc}", file=sys.stderr)
        return EXIT_REJECT
    except DecodeFailure as exc:
        print(f"isc: decode failure [{exc.stage}]: {exc.detail}", file=sys.stderr)
        return EXIT_DECODE
    except (OSError, ValueError) as exc:
        print(f"isc: {exc}", file=sys.stderr)
    return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
