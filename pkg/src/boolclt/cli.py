"""Command-line front end.

Exit codes: 0 success, 1 a verified property failed, 2 bad usage or input,
3 numerical failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from .clt import clt_iterate, convergence_table
from .corpus import DEFAULT_SEED
from .errors import (BoolCLTError, InvalidArgument, InvalidMeasure, NotAMeasure, PrecisionFailure,
                     PreconditionViolation, RootStructureViolation)
from .measure import (AtomicMeasure, bernoulli, kolmogorov_distance, levy_distance, moment,
                      sharpness_measure, standardize, example_measure)
from .transforms import boolean_convolve, boolean_power
from .verify import run_suite

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3
EXAMPLE_TOL = 1e-8
CSV_HEADER = ["n", "levy", "kolmogorov", "thm1_bound", "thm2_bound", "m4", "r4_mun"]


class UsageError(Exception):
    pass


def fmt(x) -> str:
    """Shortest decimal up to 12 significant digits; empty for None."""
    if x is None:
        return ""
    return f"{x:.12g}"


def load_measure(path: str) -> AtomicMeasure:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"{path}: {exc}") from exc
    try:
        return AtomicMeasure.from_json(obj)
    except InvalidMeasure as exc:
        raise UsageError(f"{path}: {exc}") from exc


def parse_ns(text: str) -> list[int]:
    try:
        ns = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise UsageError(f"--n expects a comma-separated list of integers: {text!r}") from exc
    if not ns:
        raise UsageError("--n is empty")
    if any(n < 1 for n in ns):
        raise UsageError("--n values must be positive")
    return ns


def _dump(obj, out):
    out.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def cmd_convolve(args, out):
    mu, nu = load_measure(args.inputs[0]), load_measure(args.inputs[1])
    _dump(boolean_convolve(mu, nu).to_json(), out)
    return EXIT_OK


def cmd_power(args, out):
    mu = load_measure(args.inputs[0])
    try:
        t = float(args.n)
    except (TypeError, ValueError) as exc:
        raise UsageError("power needs --n T with a real T >= 0") from exc
    if not t >= 0:
        raise UsageError("power needs T >= 0")
    _dump(boolean_power(mu, t).to_json(), out)
    return EXIT_OK


def cmd_distance(args, out):
    mu, nu = load_measure(args.inputs[0]), load_measure(args.inputs[1])
    _dump({"levy": levy_distance(mu, nu), "kolmogorov": kolmogorov_distance(mu, nu)}, out)
    return EXIT_OK


def cmd_clt(args, out):
    mu = standardize(load_measure(args.inputs[0]))
    ns = sorted(set(parse_ns(args.n or "")))
    rows = convergence_table(mu, ns, args.k_bound)
    if args.format == "json":
        _dump([{"n": r.n, "levy": r.levy, "kolmogorov": r.kolmogorov, "thm1_bound": r.thm1_bound,
                "thm2_bound": r.thm2_bound, "m4": r.m4, "r4_mun": r.r4_of_mun, "vacuous": r.vacuous}
               for r in rows], out)
        return EXIT_OK
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([r.n, fmt(r.levy), fmt(r.kolmogorov), fmt(r.thm1_bound), fmt(r.thm2_bound),
                    fmt(r.m4), fmt(r.r4_of_mun)])
    out.write(buf.getvalue())
    return EXIT_OK


def cmd_verify(args, out):
    if args.corpus_size < 1:
        raise UsageError("--corpus-size must be at least 1")
    extra = [standardize(load_measure(p)) for p in args.inputs]
    report = run_suite(args.seed, args.corpus_size, extra)
    _dump(report, out)
    return EXIT_OK if not report["failed"] else EXIT_FAILED


def cmd_example(args, out):
    b = bernoulli()
    if args.epsilon is not None:
        eps = args.epsilon
        if not 0 < eps < 0.5:
            raise UsageError("--epsilon must lie in (0, 1/2)")
        mu = sharpness_measure(eps)
        if args.emit:
            _dump(mu.to_json(), out)
            return EXIT_OK
        levy = levy_distance(mu, b)
        _dump({"epsilon": eps, "measure": mu.to_json(), "m4": moment(mu, 4),
               "levy_to_b": levy, "lower_bound": eps / 4}, out)
        return EXIT_OK if levy >= eps / 4 else EXIT_FAILED
    ns = parse_ns(args.n or "1")
    if len(ns) != 1:
        raise UsageError("example takes a single --n")
    n = ns[0]
    closed = example_measure(n)
    if args.emit:
        _dump(closed.to_json(), out)
        return EXIT_OK
    iterated = clt_iterate(example_measure(1), n)
    dev = iterated.max_deviation(closed)
    _dump({"n": n, "iterated": iterated.to_json(), "closed_form": closed.to_json(),
           "max_deviation": dev, "levy_to_b": levy_distance(iterated, b),
           "kolmogorov_to_b": kolmogorov_distance(iterated, b),
           "levy_lower_bound": 1 / (6 * math.sqrt(n))}, out)
    return EXIT_OK if dev <= EXAMPLE_TOL else EXIT_FAILED


COMMANDS = {
    "convolve": (cmd_convolve, 2),
    "power": (cmd_power, 1),
    "distance": (cmd_distance, 2),
    "clt": (cmd_clt, 1),
    "verify": (cmd_verify, None),
    "example": (cmd_example, 0),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boolclt", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("inputs", nargs="*", help="measure JSON files")
    parser.add_argument("--n", help="comma-separated n values (power: a real exponent)")
    parser.add_argument("--epsilon", type=float)
    parser.add_argument("--k-bound", type=float, dest="k_bound")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--corpus-size", type=int, default=200, dest="corpus_size")
    parser.add_argument("--format", choices=["json", "csv"], default=None)
    parser.add_argument("--emit", action="store_true", help="example: print only the measure JSON")
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    func, n_inputs = COMMANDS[args.command]
    if args.format is None:
        args.format = "csv" if args.command == "clt" else "json"
    try:
        if n_inputs is not None and len(args.inputs) != n_inputs:
            raise UsageError(f"{args.command} takes {n_inputs} measure file(s), got {len(args.inputs)}")
        return func(args, out)
    except UsageError as exc:
        print(f"boolclt {args.command}: {exc}", file=err)
        return EXIT_USAGE
    except (InvalidArgument, InvalidMeasure, PreconditionViolation) as exc:
        print(f"boolclt {args.command}: {exc}", file=err)
        return EXIT_USAGE
    except (NotAMeasure, PrecisionFailure, RootStructureViolation) as exc:
        print(f"boolclt {args.command}: numerical failure: {exc}", file=err)
        return EXIT_NUMERIC
    except BoolCLTError as exc:
        print(f"boolclt {args.command}: {exc}", file=err)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
