"""Command-line interface.

One subcommand per analysis route; every run emits a single JSON result
document (stable key order) to stdout or --output.  Exit codes: 0 ok,
1 usage or parse error, 2 size cap exceeded, 3 proven-theorem violation
(which would mean a bug, not mathematics).
"""

from __future__ import annotations

import argparse
import sys
import time

from . import __version__
from .analysis import (
    all_priority_orders,
    counterexample_search,
    ghw_via_resolution,
    sample_orders,
    union_testsets,
    verify_code,
)
from .codes import Code, ghw_hierarchy, minimal_support_codewords
from .errors import CapExceeded, GhwError, TheoremViolation
from .gf2 import word_from_string, word_to_string
from .groebner import TermOrder, decode, reduced_groebner_basis, test_set
from .io import (
    betti_triples,
    build_document,
    dumps_document,
    load_matrix,
    render_betti_diagram,
)
from .resolution import betti_table_hochster, ideal_from_supports, min_shift_sequence, min_shifts


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; keep that for caps
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_order_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--order", choices=("deglex", "degrevlex"),
                   default="degrevlex",
                   help="order kind (default: degrevlex)")
    p.add_argument("--vars", default=None, metavar="I1,I2,...",
                   help="variable priority, highest first, 1-based "
                        "(default: 1,2,...,n)")


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--field-char", type=int, default=2,
                   help="homology coefficient characteristic (default 2; "
                        "only 2 is exercised by the acceptance suite)")
    p.add_argument("--threads", type=int, default=1,
                   help="worker processes for the Betti sweeps (default 1)")
    p.add_argument("-o", "--output", default=None,
                   help="write the result document here instead of stdout")


def _term_order(args, n: int) -> TermOrder:
    if args.vars is None:
        return TermOrder.default(n, args.order)
    try:
        prio = tuple(int(tok) - 1 for tok in args.vars.split(","))
    except ValueError:
        raise GhwError(f"--vars must be comma-separated integers, got {args.vars!r}")
    if sorted(prio) != list(range(n)):
        raise GhwError(f"--vars must be a permutation of 1..{n}")
    return TermOrder(args.order, prio)


def _parse_order_spec(spec: str, n: int) -> TermOrder:
    kind, _, vars_part = spec.partition(":")
    if kind not in ("deglex", "degrevlex"):
        raise GhwError(f"bad order spec {spec!r}: kind must be deglex or degrevlex")
    try:
        prio = tuple(int(tok) - 1 for tok in vars_part.split(","))
    except ValueError:
        raise GhwError(f"bad order spec {spec!r}: variables must be integers")
    if sorted(prio) != list(range(n)):
        raise GhwError(f"bad order spec {spec!r}: need a permutation of 1..{n}")
    return TermOrder(kind, prio)


def _order_params(o: TermOrder) -> dict:
    return {
        "kind": o.kind,
        "vars": [i + 1 for i in o.priority],
    }


def _code_info(code: Code) -> dict:
    return {
        "n": code.n,
        "k": code.k,
        "nondegenerate": code.nondegenerate,
        "generator_rows": code.generator.row_strings(),
    }


def _load_code(path: str) -> Code:
    code = Code.from_generator(load_matrix(path))
    if not code.nondegenerate:
        print(f"ghw: warning: code is degenerate (some coordinate is zero "
              f"in every codeword); top weight will stay below {code.n}",
              file=sys.stderr)
    return code


def _cmd_ghw(args) -> dict:
    code = _load_code(args.matrix)
    params = {"matrix": args.matrix, "route": args.route,
              "field_char": args.field_char}
    if args.route == "oracle":
        seq = ghw_hierarchy(code)
        result = {
            "route": "oracle",
            "ghw": list(seq.values),
            "display": " ".join(str(d) for d in seq.values),
        }
    elif args.route == "resolution":
        seq = ghw_via_resolution(code, processes=args.threads)
        result = {
            "route": "resolution",
            "ghw": list(seq.values),
            "display": " ".join(str(d) for d in seq.values),
        }
    else:
        order = _term_order(args, code.n)
        params["order"] = _order_params(order)
        basis, _ = reduced_groebner_basis(code, order)
        words = test_set(basis, code)
        table = betti_table_hochster(
            ideal_from_supports(code.n, words), processes=args.threads)
        shifts = min_shifts(table)
        entries = []
        for i, j in enumerate(shifts, start=1):
            entries.append({"i": i, "value": j, "exact": i <= 2})
        display = " ".join(
            (str(e["value"]) if e["exact"] else f"≤{e['value']}")
            for e in entries)
        note = None
        if table.pd < code.k:
            missing = (f"d_{code.k}" if table.pd + 1 == code.k
                       else f"d_{table.pd + 1}..d_{code.k}")
            note = (f"pd of the test-set quotient is {table.pd} < k={code.k}: "
                    f"no bound for {missing}")
        result = {
            "route": "testset",
            "entries": entries,
            "pd_testset": table.pd,
            "k": code.k,
            "display": display,
            "note": note,
        }
    return build_document("ghw", params, _code_info(code), result,
                          time.perf_counter() - args._t0, __version__)


def _cmd_betti(args) -> dict:
    code = _load_code(args.matrix)
    params = {"matrix": args.matrix, "ideal": args.ideal,
              "field_char": args.field_char}
    result: dict = {"ideal": args.ideal}
    if args.ideal == "stanley-reisner":
        gens = minimal_support_codewords(code)
        ideal = ideal_from_supports(code.n, gens)
    elif args.ideal == "testset":
        order = _term_order(args, code.n)
        params["order"] = _order_params(order)
        basis, _ = reduced_groebner_basis(code, order)
        words = test_set(basis, code)
        ideal = ideal_from_supports(code.n, words)
        result["testset_size"] = len(words)
    else:
        if args.use_order:
            orders = [_parse_order_spec(s, code.n) for s in args.use_order]
            params["orders"] = "explicit"
        elif args.all_orders or (code.n <= 7 and not args.sample_orders):
            orders = list(all_priority_orders(code.n))
            params["orders"] = "all-permutations"
        else:
            count = args.sample_orders or 200
            orders = sample_orders(code.n, count, args.seed)
            params["orders"] = f"sampled:{count}"
        params["order_count"] = len(orders)
        ideal = union_testsets(code, orders)
        result["union_size"] = len(ideal.gens)
    table = betti_table_hochster(ideal, char=args.field_char,
                                 processes=args.threads)
    result.update({
        "generator_count": len(ideal.gens),
        "generators": [word_to_string(g, code.n) for g in ideal.gens],
        "betti": betti_triples(table),
        "pd": table.pd,
        "min_shift_sequence": [[i, j] for i, j in min_shift_sequence(table)],
        "diagram": render_betti_diagram(table),
    })
    return build_document("betti", params, _code_info(code), result,
                          time.perf_counter() - args._t0, __version__)


def _cmd_gb(args) -> dict:
    code = _load_code(args.matrix)
    order = _term_order(args, code.n)
    params = {"matrix": args.matrix, "order": _order_params(order),
              "field_char": args.field_char}
    basis, _ = reduced_groebner_basis(code, order)
    words = test_set(basis, code)
    result = {
        "squarefree_binomials": [
            [word_to_string(b.lead, code.n), word_to_string(b.trail, code.n)]
            for b in basis.binomials
        ],
        "squarefree_count": len(basis.binomials),
        "quadric_count": basis.quadric_count(),
        "total_elements": basis.total_size(),
        "standard_form_violations": len(basis.standard_form_violations),
        "test_set": [word_to_string(w, code.n) for w in words],
        "test_set_size": len(words),
    }
    return build_document("gb", params, _code_info(code), result,
                          time.perf_counter() - args._t0, __version__)


def _cmd_decode(args) -> dict:
    code = _load_code(args.matrix)
    order = _term_order(args, code.n)
    params = {"matrix": args.matrix, "order": _order_params(order),
              "word": args.word, "field_char": args.field_char}
    if len(args.word) != code.n:
        raise GhwError(f"word length {len(args.word)} != code length {code.n}")
    try:
        received = word_from_string(args.word)
    except ValueError as exc:
        raise GhwError(str(exc))
    _, table = reduced_groebner_basis(code, order)
    leader, codeword, weight = decode(table, received)
    result = {
        "received": args.word,
        "coset_leader": word_to_string(leader, code.n),
        "decoded": word_to_string(codeword, code.n),
        "error_weight": weight,
    }
    return build_document("decode", params, _code_info(code), result,
                          time.perf_counter() - args._t0, __version__)


def _cmd_verify(args) -> dict:
    code = _load_code(args.matrix)
    order = _term_order(args, code.n)
    params = {"matrix": args.matrix, "order": _order_params(order),
              "seed": args.seed, "field_char": args.field_char}
    report = verify_code(code, order, seed=args.seed, processes=args.threads)
    return build_document("verify", params, _code_info(code),
                          report.as_dict(),
                          time.perf_counter() - args._t0, __version__)


def _cmd_search(args) -> dict:
    if args.use_order:
        orders = [_parse_order_spec(s, args.n) for s in args.use_order]
    else:
        orders = [_term_order(args, args.n)]
    inject = tuple(load_matrix(path) for path in args.inject or ())
    params = {"n": args.n, "k": args.k, "trials": args.trials,
              "seed": args.seed,
              "orders": [_order_params(o) for o in orders],
              "injected": len(inject), "field_char": args.field_char}
    report = counterexample_search(args.n, args.k, args.trials, args.seed,
                                   orders=orders, inject=inject)
    return build_document("search", params, None, report.as_dict(),
                          time.perf_counter() - args._t0, __version__)


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="ghw",
        description="Generalized Hamming weights of binary linear codes via "
                    "brute force, Betti tables of the circuit ideal, and "
                    "Groebner test sets.",
        epilog="Matrix files: one row per line, space-separated 0/1 entries, "
               "blank lines and # comments ignored. Bitstrings are printed "
               "with coordinate 1 leftmost. GHW_SIZE_CAP overrides the "
               "length cap of 24 (unsupported; for experimentation only).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ghw", help="weight hierarchy by a chosen route")
    p.add_argument("matrix")
    p.add_argument("--route", choices=("oracle", "resolution", "testset"),
                   default="oracle")
    _add_order_flags(p)
    _add_common_flags(p)
    p.set_defaults(func=_cmd_ghw)

    p = sub.add_parser("betti", help="Betti table of a code-derived ideal")
    p.add_argument("matrix")
    p.add_argument("--ideal",
                   choices=("stanley-reisner", "testset", "union-testsets"),
                   default="stanley-reisner")
    p.add_argument("--all-orders", action="store_true",
                   help="union over every deglex/degrevlex priority "
                        "permutation (default when n <= 7)")
    p.add_argument("--sample-orders", type=int, default=0, metavar="N",
                   help="union over N seeded random orders (default above n=7: 200)")
    p.add_argument("--use-order", action="append", metavar="KIND:V1,V2,...",
                   help="explicit order for the union, repeatable")
    p.add_argument("--seed", type=int, default=0)
    _add_order_flags(p)
    _add_common_flags(p)
    p.set_defaults(func=_cmd_betti)

    p = sub.add_parser("gb", help="reduced Groebner basis and test set")
    p.add_argument("matrix")
    _add_order_flags(p)
    _add_common_flags(p)
    p.set_defaults(func=_cmd_gb)

    p = sub.add_parser("decode", help="decode a word by coset-leader reduction")
    p.add_argument("matrix")
    p.add_argument("word", help="received word as a bitstring")
    _add_order_flags(p)
    _add_common_flags(p)
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("verify", help="run every proven check on one code")
    p.add_argument("matrix")
    p.add_argument("--seed", type=int, default=0)
    _add_order_flags(p)
    _add_common_flags(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("search", help="randomized counterexample search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--use-order", action="append", metavar="KIND:V1,V2,...",
                   help="order to test each sampled code under, repeatable")
    p.add_argument("--inject", action="append", metavar="FILE",
                   help="matrix file evaluated before the random stream, repeatable")
    _add_order_flags(p)
    _add_common_flags(p)
    p.set_defaults(func=_cmd_search)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    args._t0 = time.perf_counter()
    try:
        doc = args.func(args)
    except CapExceeded as exc:
        print(f"ghw: size cap exceeded: {exc}", file=sys.stderr)
        return 2
    except TheoremViolation as exc:
        print(f"ghw: internal consistency failure: {exc}", file=sys.stderr)
        return 3
    except (GhwError, OSError) as exc:
        print(f"ghw: {exc}", file=sys.stderr)
        return 1
    text = dumps_document(doc)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
