"""Command-line front end.

JSON goes to stdout (``--pretty`` switches to a readable table), diagnostics
to stderr.  Exit codes: 0 success, 1 bad input file, 2 oracle disagreement
under ``--compare-oracle``, 3 solver cap exceeded, 64 invalid command line.
"""

from __future__ import annotations

import argparse
import json
import sys

from .domsets import (
    SetKind,
    dominating,
    efficient,
    independent_one_k,
    j_dependent_one_k,
    j_dependent_total_one_k,
    one_k,
    open_efficient,
    total_dominating,
    total_one_k,
)
from .graphs import build_standard, format_edge_list, lex_product, load_graph, save_graph
from .lex_theory import (
    DisconnectedFactorError,
    characterize_independent,
    characterize_total,
    product_gamma,
    verify_against_oracle,
    verify_membership_against_oracle,
)
from .npc import build_gadget, decide_x3c, x3c_from_json
from .solvers import GraphTooLargeError, closed_form, min_set

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DISAGREE = 2
EXIT_CAP = 3
EXIT_USAGE = 64

KIND_TOKENS = ("dom", "total", "1k", "t1k", "i1k", "jd1k", "jdt1k", "eff", "oeff")

PRODUCT_KIND_TOKENS = {
    "plain": "plain",
    "total": "total",
    "one2": "one_2",
    "t-one2": "total_one_2",
    "i-one2": "i_one_2",
    "i-one-k": "i_one_k",
}

CLOSED_FORM_TOKENS = {"t1k": "t1k", "1k": "one_k", "i1k": "i1k"}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_kind(token: str, j: int | None, k: int | None) -> SetKind:
    needs_k = token in ("1k", "t1k", "i1k", "jd1k", "jdt1k")
    needs_j = token in ("jd1k", "jdt1k")
    if needs_k and k is None:
        raise SystemExit(_usage_error(f"--k is required for kind {token}"))
    if needs_j and j is None:
        raise SystemExit(_usage_error(f"--j is required for kind {token}"))
    try:
        if token == "dom":
            return dominating()
        if token == "total":
            return total_dominating()
        if token == "1k":
            return one_k(k)
        if token == "t1k":
            return total_one_k(k)
        if token == "i1k":
            return independent_one_k(k)
        if token == "jd1k":
            return j_dependent_one_k(j, k)
        if token == "jdt1k":
            return j_dependent_total_one_k(j, k)
        if token == "eff":
            return efficient()
        return open_efficient()
    except ValueError as exc:
        raise SystemExit(_usage_error(str(exc))) from None


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _emit(payload: dict, pretty: bool) -> None:
    if pretty:
        width = max(len(key) for key in payload)
        for key, value in payload.items():
            print(f"{key.ljust(width)}  {value}")
    else:
        print(json.dumps(payload))


def _cmd_gen(args) -> int:
    graph = build_standard(args.family, args.n)
    if args.output:
        save_graph(graph, args.output)
        print(f"wrote {args.output} ({graph.n} vertices, {graph.num_edges} edges)",
              file=sys.stderr)
    else:
        sys.stdout.write(format_edge_list(graph))
    return EXIT_OK


def _cmd_product(args) -> int:
    g = load_graph(args.g)
    h = load_graph(args.h)
    product, idx = lex_product(g, h)
    if args.output:
        save_graph(product, args.output)
        print(f"wrote {args.output} ({product.n} vertices)", file=sys.stderr)
    else:
        sys.stdout.write(format_edge_list(product))
    if args.layer_map:
        layer_map = {
            "n_g": idx.n_g,
            "n_h": idx.n_h,
            "h_layers": {str(gv): list(idx.h_layer(gv)) for gv in range(idx.n_g)},
            "g_layers": {str(hv): list(idx.g_layer(hv)) for hv in range(idx.n_h)},
        }
        with open(args.layer_map, "w", encoding="utf-8") as fh:
            json.dump(layer_map, fh)
    return EXIT_OK


def _cmd_solve(args) -> int:
    graph = load_graph(args.graph)
    kind = _build_kind(args.kind, args.j, args.k)
    result = min_set(graph, kind, limit=args.limit, force=args.force)
    _emit(result.to_dict(), args.pretty)
    return EXIT_OK


def _cmd_closed_form(args) -> int:
    value = closed_form(args.family, args.n, CLOSED_FORM_TOKENS[args.kind], args.k)
    _emit({"family": args.family, "n": args.n, "kind": args.kind,
           "k": args.k, "value": value}, args.pretty)
    return EXIT_OK


def _cmd_theorem(args) -> int:
    g = load_graph(args.g)
    h = load_graph(args.h)
    if args.which == "product-gamma":
        kind = PRODUCT_KIND_TOKENS[args.kind]
        if args.compare_oracle:
            report = verify_against_oracle(g, h, kind, args.k, force=args.force)
            _emit(report.to_dict(), args.pretty)
            return EXIT_OK if report.agree else EXIT_DISAGREE
        analysis = product_gamma(g, h, kind, args.k)
        _emit(analysis.to_dict(), args.pretty)
        return EXIT_OK
    which = "total" if args.which == "total" else "independent"
    if args.compare_oracle:
        report = verify_membership_against_oracle(g, h, which, args.k, force=args.force)
        _emit(report.to_dict(), args.pretty)
        return EXIT_OK if report.agree else EXIT_DISAGREE
    fn = characterize_total if which == "total" else characterize_independent
    _emit(fn(g, h, args.k).to_dict(), args.pretty)
    return EXIT_OK


def _cmd_reduce(args) -> int:
    with open(args.instance, "r", encoding="utf-8") as fh:
        inst = x3c_from_json(fh.read())
    graph, meta = build_gadget(inst)
    if args.output:
        save_graph(graph, args.output)
        print(f"wrote {args.output} ({graph.n} vertices, budget {meta.budget})",
              file=sys.stderr)
    else:
        sys.stdout.write(format_edge_list(graph))
    if args.meta:
        with open(args.meta, "w", encoding="utf-8") as fh:
            fh.write(meta.to_sidecar_json())
    return EXIT_OK


def _cmd_decide_x3c(args) -> int:
    with open(args.instance, "r", encoding="utf-8") as fh:
        inst = x3c_from_json(fh.read())
    payload: dict = {"universe": inst.universe_size, "num_sets": inst.num_sets}
    if args.mode in ("both", "brute_force"):
        payload["brute_force"] = decide_x3c(inst, "brute_force")
    if args.mode in ("both", "via_gadget"):
        payload["via_gadget"] = decide_x3c(inst, "via_gadget", force=args.force)
    if args.mode == "both":
        payload["agree"] = payload["brute_force"] == payload["via_gadget"]
    _emit(payload, args.pretty)
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="domkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="write a standard graph as an edge list")
    p_gen.add_argument("family", choices=("path", "cycle", "complete", "star", "empty"))
    p_gen.add_argument("n", type=int)
    p_gen.add_argument("-o", "--output")
    p_gen.set_defaults(fn=_cmd_gen)

    p_prod = sub.add_parser("product", help="lexicographic product of two edge lists")
    p_prod.add_argument("g")
    p_prod.add_argument("h")
    p_prod.add_argument("-o", "--output")
    p_prod.add_argument("--layer-map")
    p_prod.set_defaults(fn=_cmd_product)

    p_solve = sub.add_parser("solve", help="exact minimum set of a kind")
    p_solve.add_argument("graph")
    p_solve.add_argument("--kind", choices=KIND_TOKENS, required=True)
    p_solve.add_argument("--j", type=int)
    p_solve.add_argument("--k", type=int)
    p_solve.add_argument("--limit", type=int)
    p_solve.add_argument("--force", action="store_true")
    p_solve.add_argument("--pretty", action="store_true")
    p_solve.set_defaults(fn=_cmd_solve)

    p_cf = sub.add_parser("closed-form", help="path/cycle closed-form value")
    p_cf.add_argument("family", choices=("path", "cycle"))
    p_cf.add_argument("n", type=int)
    p_cf.add_argument("--kind", choices=tuple(CLOSED_FORM_TOKENS), required=True)
    p_cf.add_argument("--k", type=int, default=2)
    p_cf.add_argument("--pretty", action="store_true")
    p_cf.set_defaults(fn=_cmd_closed_form)

    p_thm = sub.add_parser("theorem", help="product theorems, optionally oracle-checked")
    p_thm.add_argument("which", choices=("total", "independent", "product-gamma"))
    p_thm.add_argument("g")
    p_thm.add_argument("h")
    p_thm.add_argument("--kind", choices=tuple(PRODUCT_KIND_TOKENS), default="one2")
    p_thm.add_argument("--k", type=int, default=2)
    p_thm.add_argument("--compare-oracle", action="store_true")
    p_thm.add_argument("--strict", action="store_true",
                       help="kept for scripting clarity; disagreement always exits 2")
    p_thm.add_argument("--force", action="store_true")
    p_thm.add_argument("--pretty", action="store_true")
    p_thm.set_defaults(fn=_cmd_theorem)

    p_red = sub.add_parser("reduce", help="build the Exact-3-Cover gadget")
    p_red.add_argument("instance")
    p_red.add_argument("-o", "--output")
    p_red.add_argument("--meta")
    p_red.set_defaults(fn=_cmd_reduce)

    p_dec = sub.add_parser("decide-x3c", help="decide Exact-3-Cover both ways")
    p_dec.add_argument("instance")
    p_dec.add_argument("--mode", choices=("both", "via_gadget", "brute_force"),
                       default="both")
    p_dec.add_argument("--force", action="store_true")
    p_dec.add_argument("--pretty", action="store_true")
    p_dec.set_defaults(fn=_cmd_decide_x3c)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.fn(args)
    except GraphTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except DisconnectedFactorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
