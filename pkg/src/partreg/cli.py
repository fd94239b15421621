"""Command-line interface.

Every subcommand prints one JSON document on stdout. Exit codes:
0 found / affirmative, 1 not found / negative, 2 usage or input error,
3 resource cap hit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from partreg import closure as closure_mod
from partreg.algebra import format_rational, parse_rational
from partreg.ceder import (CederParams, SparseQVector, ceder_color_id, enumerate_universe,
                           gamma_from_triple, signature, signature_key, support, verify_ceder)
from partreg.equations import (LinearEquation, find_distinct_kernel_vector, has_zero_subset_sum,
                               is_distinct_regular)
from partreg.errors import MalformedCertificateError, PartregError, SearchLimitExceeded
from partreg.search import (Coloring, ForcingResult, find_mono_solution, forcing_number,
                            four_from_ramsey, four_from_vdw, vdw_forcing, verify_certificate)

EXIT_FOUND, EXIT_NOT_FOUND, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
THREADS_ENV = "PARTREG_THREADS"

# flags whose values are comma lists that may start with "-"
_LIST_FLAGS = {"--coeffs", "--coord-grid", "--base", "--query", "--gamma"}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _rational_list(text: str):
    try:
        return [parse_rational(t) for t in text.split(",") if t.strip()]
    except PartregError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _rational(text: str):
    try:
        return parse_rational(text)
    except PartregError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _glue_list_values(argv: list[str]) -> list[str]:
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _LIST_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise PartregError(f"cannot read JSON from {path}: {exc}")


def _load_coloring(path: str) -> Coloring:
    return Coloring.from_json(_load_json(path))


# -- subcommands ------------------------------------------------------------


def cmd_check(args):
    eq = LinearEquation(tuple(args.coeffs), args.distinct)
    lam = find_distinct_kernel_vector(eq)
    regular = has_zero_subset_sum(eq)
    distinct_regular = is_distinct_regular(eq)
    payload = {
        "equation": eq.to_json(),
        "regular": regular,
        "distinct_regular": distinct_regular,
        "lambda": None if lam is None else [format_rational(q) for q in lam],
    }
    verdict = distinct_regular if eq.require_distinct else regular
    return (EXIT_FOUND if verdict else EXIT_NOT_FOUND), payload


def cmd_solve(args):
    col = _load_coloring(args.coloring)
    eq = LinearEquation(tuple(args.coeffs), args.distinct)
    sol = find_mono_solution(col, eq)
    payload = {"equation": eq.to_json(), "found": sol is not None,
               "solution": None if sol is None else sol.to_json()}
    return (EXIT_FOUND if sol else EXIT_NOT_FOUND), payload


def _forcing_outcome(run, args):
    try:
        result: ForcingResult = run()
    except SearchLimitExceeded as exc:
        return EXIT_CAP, {"error": str(exc), "partial": exc.partial}
    cert = result.to_json()
    if args.out:
        Path(args.out).write_text(json.dumps(cert, indent=2) + "\n")
    payload = dict(cert, nodes=result.nodes)
    return (EXIT_FOUND if result.found else EXIT_NOT_FOUND), payload


def cmd_forcing(args):
    eq = LinearEquation(tuple(args.coeffs), args.distinct)
    return _forcing_outcome(
        lambda: forcing_number(eq, args.colors, args.nmax, node_limit=args.node_limit), args)


def cmd_vdw(args):
    return _forcing_outcome(
        lambda: vdw_forcing(args.k, args.colors, args.nmax, node_limit=args.node_limit), args)


def cmd_verify(args):
    data = _load_json(args.cert)
    try:
        ok = verify_certificate(data)
    except MalformedCertificateError as exc:
        raise PartregError(str(exc))
    return (EXIT_FOUND if ok else EXIT_NOT_FOUND), {"valid": ok}


def cmd_four(args):
    col = _load_coloring(args.coloring)
    finder = four_from_vdw if args.method == "vdw" else four_from_ramsey
    sol = finder(col)
    payload = {"method": args.method, "found": sol is not None,
               "solution": None if sol is None else sol.to_json()}
    return (EXIT_FOUND if sol else EXIT_NOT_FOUND), payload


def cmd_ceder_verify(args):
    params = CederParams(args.gamma)
    universe = enumerate_universe(args.max_index, args.coord_grid, args.max_support)
    report = verify_ceder(params, universe, threads=args.threads)
    return (EXIT_FOUND if report.ok else EXIT_NOT_FOUND), report.to_json()


def cmd_ceder_color(args):
    w = SparseQVector.from_json(_load_json(args.vector))
    sig = signature(w)
    payload = {
        "vector": w.to_json(),
        "support": list(support(w)),
        "signature": [format_rational(q) for q in sig],
        "color": signature_key(sig),
        "color_id": ceder_color_id(w),
    }
    return EXIT_FOUND, payload


def cmd_ceder_gamma(args):
    if len(args.coeffs) != 3:
        raise PartregError("ceder gamma takes exactly three coefficients")
    gamma = gamma_from_triple(*args.coeffs)
    return EXIT_FOUND, {"coeffs": [format_rational(b) for b in args.coeffs],
                        "gamma": format_rational(gamma)}


def cmd_closure(args):
    state = closure_mod.closure_enumerate(args.base, args.depth, args.cap)
    payload = state.to_json()
    code = EXIT_CAP if state.capped else EXIT_FOUND
    if args.query is not None:
        q = args.query
        level = state.level_of(q)
        payload["query"] = format_rational(q)
        payload["found"] = level is not None
        payload["level"] = level
        payload["verdict"] = "member" if level is not None else "not found within depth"
        if level is not None:
            code = EXIT_FOUND
        elif not state.capped:
            code = EXIT_NOT_FOUND
    return code, payload


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    def common_flags(suppress: bool) -> argparse.ArgumentParser:
        # subcommand copies use SUPPRESS so they do not clobber flags given
        # before the subcommand name
        dflt = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--pretty", action="store_true", default=dflt(False),
                            help="indent JSON output")
        common.add_argument("--seed", type=int, default=dflt(None),
                            help="reserved; every algorithm is deterministic")
        common.add_argument("--threads", type=int,
                            default=dflt(int(os.environ.get(THREADS_ENV, "1") or 1)),
                            help=f"worker bound for parallel scans (default ${THREADS_ENV} or 1)")
        return common

    top, common = common_flags(False), common_flags(True)

    parser = _Parser(prog="partreg", description=__doc__.splitlines()[0], parents=[top])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_, parents=[common])
        p.set_defaults(func=func)
        return p

    p = add("check", cmd_check, "decide (distinct) regularity of an equation")
    p.add_argument("--coeffs", type=_int_list, required=True)
    p.add_argument("--distinct", action="store_true")

    p = add("solve", cmd_solve, "find a monochromatic solution in a coloring")
    p.add_argument("--coloring", required=True)
    p.add_argument("--coeffs", type=_int_list, required=True)
    p.add_argument("--distinct", action="store_true")

    p = add("forcing", cmd_forcing, "forcing number with avoider certificate")
    p.add_argument("--coeffs", type=_int_list, required=True)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--distinct", action="store_true")
    p.add_argument("--node-limit", type=int, default=None)
    p.add_argument("--out", help="also write the certificate to this file")

    p = add("vdw", cmd_vdw, "van der Waerden forcing number")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--node-limit", type=int, default=None)
    p.add_argument("--out")

    p = add("verify", cmd_verify, "re-check a forcing certificate")
    p.add_argument("--cert", required=True)

    p = add("four", cmd_four, "monochromatic distinct e1+e2=e3+e4")
    p.add_argument("--coloring", required=True)
    p.add_argument("--method", choices=("vdw", "ramsey"), default="vdw")

    p = add("ceder", None, "signature coloring tools")
    ceder_sub = p.add_subparsers(dest="ceder_command", parser_class=_Parser)
    q = ceder_sub.add_parser("verify", parents=[common])
    q.set_defaults(func=cmd_ceder_verify)
    q.add_argument("--gamma", type=_rational, required=True)
    q.add_argument("--max-index", type=int, required=True)
    q.add_argument("--coord-grid", type=_rational_list, required=True)
    q.add_argument("--max-support", type=int, default=None)
    q = ceder_sub.add_parser("color", parents=[common])
    q.set_defaults(func=cmd_ceder_color)
    q.add_argument("--vector", required=True)
    q = ceder_sub.add_parser("gamma", parents=[common])
    q.set_defaults(func=cmd_ceder_gamma)
    q.add_argument("--coeffs", type=_rational_list, required=True)

    p = add("closure", cmd_closure, "level-wise closure under + - * /")
    p.add_argument("--base", type=_rational_list, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--cap", type=int, default=100_000)
    p.add_argument("--query", type=_rational, default=None)
    return parser


def run(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_list_values(argv))
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    if getattr(args, "func", None) is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    try:
        code, payload = args.func(args)
    except PartregError as exc:
        print(f"partreg: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(json.dumps(payload, indent=2 if args.pretty else None))
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
