"""Command-line entry point: ``cyclic-tilt <subcommand> ...``.

Exit status: 0 success, 1 verification failure, 2 usage error,
3 budget exceeded.
"""
import argparse
import json
import os
import sys

from . import serialize as ser
from .cluster import ClusterObject, exchange_angles
from .combinatorics import Params, enumerate_index_set, intertwines
from .complex import (
    build_complex,
    euler_characteristic,
    f_vector,
    find_nonextendable,
    is_clique_complex,
    reduced_euler_characteristic,
)
from .errors import ExchangeObstruction, InvalidArgument, LimitExceeded, NotATriangulation
from .mutation import build_flip_graph, flip
from .reptheory import ModuleIndex, tilting_exchange
from .triangulation import (
    DEFAULT_BUDGET,
    e_set,
    enumerate_facesets,
    is_non_intertwining,
    reconstruct,
    validate,
)
from .tropical import Lamination, make_rng, random_lamination, tropical_exchange_check
from .verify import run_battery

BUDGET_ENV = "CYCLIC_TILT_BUDGET"


class UsageError(Exception):
    pass


class VerificationFailed(Exception):
    def __init__(self, diagnostic):
        super().__init__(diagnostic.get("error", "verification failed"))
        self.diagnostic = diagnostic


def parse_tuple(text):
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _positive(text):
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _default_budget():
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}")


class Output:
    def __init__(self, path):
        self.fh = open(path, "w") if path else sys.stdout

    def line(self, text=""):
        self.fh.write(text + "\n")

    def close(self):
        if self.fh is not sys.stdout:
            self.fh.close()


def _params(args):
    return Params(args.m, args.d)


# -- subcommands -------------------------------------------------------------


def cmd_enumerate(args, out):
    for x in enumerate_facesets(_params(args), args.budget, args.threads):
        if args.faces:
            out.line(ser.dumps(ser.faceset_to_json(x)))
        else:
            out.line(ser.dumps(ser.triangulation_to_json(reconstruct(x))))


def cmd_validate(args, out):
    obj = _read_json(args.input)
    if "cells" in obj:
        t = ser.triangulation_from_json(obj)
        if not validate(t):
            raise VerificationFailed({"error": "not a triangulation", "m": t.m, "d": t.d})
    else:
        x = ser.faceset_from_json(obj)
        if not is_non_intertwining(x.faces):
            raise VerificationFailed({"error": "face set intertwines"})
        try:
            reconstruct(x)
        except NotATriangulation as exc:
            raise VerificationFailed({"error": str(exc)})
    out.line("OK")


def cmd_reconstruct(args, out):
    x = ser.faceset_from_json(_read_json(args.input))
    try:
        t = reconstruct(x)
    except NotATriangulation as exc:
        raise VerificationFailed({"error": str(exc)})
    out.line(ser.dumps(ser.triangulation_to_json(t)))


def cmd_flip(args, out):
    x = ser.faceset_from_json(_read_json(args.input))
    res = flip(x, args.at)
    if res is None:
        out.line(ser.dumps({"result": "NoFlip", "at": list(args.at)}))
        return
    y, b = res
    if args.report:
        print(f"flipped {ser.tuple_label(args.at)} -> {ser.tuple_label(b)}", file=sys.stderr)
    out.line(ser.dumps(ser.faceset_to_json(y)))


def cmd_flip_graph(args, out):
    g = build_flip_graph(_params(args), args.budget, args.threads)
    if args.format == "dot":
        out.fh.write(ser.flip_graph_to_dot(g))
    else:
        out.line(ser.dumps(ser.flip_graph_to_json(g)))


def _tilting_context(i, j, args):
    if args.input:
        return ser.faceset_from_json(_read_json(args.input))
    p = Params(i.top, i.d)
    for x in enumerate_facesets(p, args.budget, args.threads):
        if i.tuple in x.faces:
            res = flip(x, i.tuple) if i.tuple in x.interior() else None
            if res is not None and res[1] == j.tuple:
                return x
    raise VerificationFailed({"error": "no tilting set exchanges source for target"})


def cmd_exchange(args, out):
    if args.cluster:
        a = ClusterObject(args.n, args.d, args.i)
        b = ClusterObject(args.n, args.d, args.j)
        out.line(ser.dumps(ser.angles_to_json(exchange_angles(a, b))))
        return
    i = ModuleIndex(args.n, args.d, args.i)
    j = ModuleIndex(args.n, args.d, args.j)
    if not intertwines(i.tuple, j.tuple):
        raise InvalidArgument(f"{args.i} must intertwine {args.j}")
    t = _tilting_context(i, j, args)
    try:
        seq = tilting_exchange(i, j, t)
    except ExchangeObstruction as exc:
        raise VerificationFailed({"error": str(exc)})
    out.line(ser.dumps(ser.exchange_sequence_to_json(seq)))


def cmd_tropical(args, out):
    p = _params(args)
    if args.pair:
        a, b = args.pair
        if not intertwines(a, b):
            raise InvalidArgument("--pair A B needs A to intertwine B")
        pairs = [(a, b)]
    else:
        inner = enumerate_index_set(p, interior_only=True)
        pairs = [(a, b) for a in inner for b in inner if intertwines(a, b)]
        if not pairs:
            raise InvalidArgument(f"no intertwining interior pairs at m={p.m}, d={p.d}")

    if args.lamination:
        lam = ser.lamination_from_json(_read_json(args.lamination))
        if (lam.m, lam.d) != (p.m, p.d):
            raise InvalidArgument("lamination parameters do not match --m/--d")
        cases = [(a, b, lam) for a, b in pairs]
    elif args.random:
        cases = []
        for k in range(args.random):
            rng = make_rng(args.seed, k)
            a, b = pairs[int(rng.integers(len(pairs)))]
            lam = random_lamination(rng, p.m, p.d, int(rng.integers(1, args.max_leaves + 1)))
            cases.append((a, b, lam))
    else:
        raise UsageError("tropical needs --lamination FILE or --random N")

    held = equal = 0
    failures = []
    for a, b, lam in cases:
        r = tropical_exchange_check(a, b, lam)
        held += r.holds
        equal += r.rhs_m == r.rhs_n
        if args.verbose:
            out.line(ser.dumps({
                "a": list(a), "b": list(b), "leaves": len(lam),
                "lhs": r.lhs, "rhs_m": r.rhs_m, "rhs_n": r.rhs_n, "holds": r.holds,
            }))
        if not r.holds:
            failures.append({"a": list(a), "b": list(b), "lamination": ser.lamination_to_json(lam)})
    total = len(cases)
    summary = f"{held}/{total} hold"
    if p.d % 2 == 0:
        summary += "; rhs_m==rhs_n in all cases (d even)" if equal == total else f"; rhs_m==rhs_n in {equal}/{total} cases (d even)"
    out.line(summary)
    if failures or (p.d % 2 == 0 and equal != total):
        raise VerificationFailed({"error": "tropical relation failed", "failures": failures[:10]})


def cmd_search_nonextendable(args, out):
    found = find_nonextendable(args.n, args.d)
    out.line(ser.dumps([[list(t) for t in s] for s in found]))


def cmd_complex_stats(args, out):
    c = build_complex(args.n, args.d, args.budget, args.threads)
    out.line("f-vector: " + ",".join(str(v) for v in f_vector(c)))
    out.line(f"euler: {euler_characteristic(c)}")
    out.line(f"reduced-euler: {reduced_euler_characteristic(c)}")
    out.line(f"clique-complex: {str(is_clique_complex(c)).lower()}")
    if args.output_json:
        with open(args.output_json, "w") as fh:
            fh.write(ser.dumps(ser.complex_to_json(c)) + "\n")


def cmd_verify(args, out):
    checks = run_battery(_params(args), args.budget, args.threads, args.tropical_cases, args.seed)
    for c in checks:
        out.line(f"{'PASS' if c.ok else 'FAIL'} {c.name} {c.detail}".rstrip())
    failed = [c.name for c in checks if not c.ok]
    if failed:
        raise VerificationFailed({"error": "invariant battery failed", "checks": failed})


# -- parser ----------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(prog="cyclic-tilt", description=__doc__.splitlines()[0])
    parser.add_argument("--budget", type=_positive, default=None,
                        help=f"backtrack-node limit (default ${BUDGET_ENV} or {DEFAULT_BUDGET})")
    parser.add_argument("--threads", type=_positive, default=os.cpu_count() or 1)
    parser.add_argument("--output", "-o", default=None, help="write output here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def md(p):
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--d", type=int, required=True)

    def nd(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("enumerate", help="stream all triangulations as JSON lines")
    md(p)
    p.add_argument("--faces", action="store_true", help="emit e-sets instead of cells")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("validate", help="check a triangulation or face-set file")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("reconstruct", help="face-set file to triangulation")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("flip", help="flip a face set at one tuple")
    p.add_argument("--input", required=True)
    p.add_argument("--at", type=parse_tuple, required=True)
    p.add_argument("--report", action="store_true", help="print the exchanged pair to stderr")
    p.set_defaults(func=cmd_flip)

    p = sub.add_parser("flip-graph", help="flip graph as DOT or JSON")
    md(p)
    p.add_argument("--format", choices=["dot", "json"], default="json")
    p.set_defaults(func=cmd_flip_graph)

    p = sub.add_parser("exchange", help="exchange sequence or exchange angles for a pair")
    nd(p)
    p.add_argument("--i", type=parse_tuple, required=True)
    p.add_argument("--j", type=parse_tuple, required=True)
    p.add_argument("--cluster", action="store_true", help="cluster-category angles (m = n+2d+1)")
    p.add_argument("--input", help="tilting face set containing --i (module case)")
    p.set_defaults(func=cmd_exchange)

    p = sub.add_parser("tropical", help="check the tropical exchange relation")
    md(p)
    p.add_argument("--pair", type=parse_tuple, nargs=2, metavar=("A", "B"))
    p.add_argument("--lamination")
    p.add_argument("--random", type=_positive)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-leaves", type=_positive, default=5)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_tropical)

    p = sub.add_parser("search-nonextendable", help="maximal non-crossing sets below facet size")
    nd(p)
    p.set_defaults(func=cmd_search_nonextendable)

    p = sub.add_parser("complex-stats", help="f-vector, Euler characteristic, clique test")
    nd(p)
    p.add_argument("--output-json", help="also write the complex as JSON")
    p.set_defaults(func=cmd_complex_stats)

    p = sub.add_parser("verify", help="run the invariant battery at (m, d)")
    md(p)
    p.add_argument("--tropical-cases", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget is None:
        args.budget = _default_budget()
    out = Output(args.output)
    try:
        args.func(args, out)
    except (InvalidArgument, NotATriangulation, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except VerificationFailed as exc:
        print(ser.dumps(exc.diagnostic))
        return 1
    finally:
        out.close()
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
