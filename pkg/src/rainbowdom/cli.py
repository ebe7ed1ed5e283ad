"""Command-line interface.

Subcommands: invariant, product, certify, construct, validate, enumerate,
verify. Every printed value is re-validated against its witness first, so a
zero exit status certifies the output. Error exit codes: 2 for unparseable
input, 3 for size caps, 4 for exhausted search budgets, 5 for violated
preconditions; `validate` exits 1 on an invalid labeling.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import certify as certify_mod
from . import constructions, couples, labelings, products, solvers
from .errors import (
    BudgetError,
    CapExceededError,
    CapacityError,
    ParseError,
    PreconditionError,
    RainbowDomError,
)
from .graphs import (
    Graph,
    enumerate_connected_graphs,
    gen_complete,
    gen_cycle,
    gen_double_c4,
    gen_glued_paths,
    gen_path,
    gen_star,
    is_dominating_set,
    is_total_dominating_set,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)

_NAMED = re.compile(r"^([PCKS])(\d+)$")
_GLUED = re.compile(r"^GLUED(\d+)_(\d+)$")
_GENERATORS = {
    "P": gen_path,
    "C": gen_cycle,
    "K": gen_complete,
    "S": gen_star,
}


def _load_graph(name_or_path: str, fmt: str | None = None) -> Graph:
    """A named generator (P4, C5, K3, S4, DC4, GLUED2_1) or a file path."""
    if fmt is None:
        if name_or_path == "DC4":
            return gen_double_c4()
        m = _NAMED.match(name_or_path)
        if m:
            return _GENERATORS[m.group(1)](int(m.group(2)))
        m = _GLUED.match(name_or_path)
        if m:
            return gen_glued_paths(int(m.group(1)), int(m.group(2)))
    path = Path(name_or_path)
    if not path.is_file():
        raise ParseError(f"not a known graph name or readable file: {name_or_path}")
    text = path.read_text()
    chosen = fmt or ("graph6" if path.suffix == ".g6" else "edges")
    if chosen == "graph6":
        return parse_graph6(text)
    return parse_edge_list(text)


def _fmt_set(vertices) -> str:
    return "{" + ", ".join(str(v) for v in sorted(vertices)) + "}"


def _out(args, text: str):
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)


def _cmd_invariant(args) -> int:
    g = _load_graph(args.graph, args.format)
    budget = args.budget
    if args.type == "gamma":
        res = solvers.min_dominating_set(g, node_budget=budget)
        if len(res.witness) != res.value or not is_dominating_set(g, res.witness):
            raise RainbowDomError("internal check failed: witness invalid")
        print(f"gamma = {res.value}")
        print(f"witness: {_fmt_set(res.witness)}")
    elif args.type == "gammat":
        res = solvers.min_total_dominating_set(g, node_budget=budget)
        if len(res.witness) != res.value or not is_total_dominating_set(g, res.witness):
            raise RainbowDomError("internal check failed: witness invalid")
        print(f"gamma_t = {res.value}")
        print(f"witness: {_fmt_set(res.witness)}")
    else:
        res = solvers.min_rainbow(g, args.k, node_budget=budget)
        if res.witness.weight != res.value or not labelings.is_k_rainbow_dominating(
            g, res.witness
        ):
            raise RainbowDomError("internal check failed: witness invalid")
        print(f"rd_{args.k} = {res.value}")
        sys.stdout.write(labelings.format_labeling(res.witness))
    return 0


def _cmd_product(args) -> int:
    g = _load_graph(args.g, args.format)
    h = _load_graph(args.h, args.format)
    build = products.lexicographic if args.kind == "lex" else products.cartesian
    prod, _ = build(g, h)
    encoded = to_graph6(prod)
    if parse_graph6(encoded) != prod:
        raise RainbowDomError("internal check failed: product round-trip")
    print(encoded)
    return 0


def _cmd_certify(args) -> int:
    g = _load_graph(args.g, args.format)
    h = _load_graph(args.h, args.format)
    cert = certify_mod.certify_rd_lex(
        g,
        h,
        strict=args.strict,
        refine=not args.no_refine,
        node_budget=args.budget,
    )
    print(f"certificate: {cert.describe()}")
    if cert.lower is not None:
        lw = cert.lower
        if lw.kind == "couple":
            detail = (
                f"A={_fmt_set(lw.couple.a)} B={_fmt_set(lw.couple.b)}"
            )
        elif lw.vertices is not None:
            detail = _fmt_set(lw.vertices)
        else:
            detail = "exact solve"
        print(f"lower witness: {lw.kind} = {lw.value} ({detail})")
    if cert.upper_labeling is not None:
        print(f"upper labeling weight: {cert.upper_labeling.weight}")
    print("citations:")
    for c in cert.citations:
        print(f"  - {c}")
    if cert.parts:
        print("components:")
        for back, part in cert.parts:
            print(f"  vertices {_fmt_set(back)}: {part.describe()}")
    if args.labeling_out:
        best = cert.refined_labeling or cert.upper_labeling
        Path(args.labeling_out).write_text(labelings.format_labeling(best))
        print(f"wrote {args.labeling_out}")
    return 0


def _pair_for(h: Graph, args, budget: int) -> tuple[int, int]:
    if args.u is not None and args.v is not None:
        return args.u, args.v
    pw = solvers.pair_witness(h, node_budget=budget)
    if pw is None or pw.v is None:
        raise PreconditionError(
            "h has no pair witness; pass --u and --v explicitly if you "
            "believe otherwise"
        )
    return pw.u, pw.v


def _cmd_construct(args) -> int:
    budget = args.budget
    h = _load_graph(args.h, args.format)
    if args.kind == "tiles":
        if args.n is None:
            raise ParseError("construct tiles needs --n")
        u, v = _pair_for(h, args, budget)
        f = constructions.path_pattern_labeling(args.n, h, u, v, node_budget=budget)
        g = gen_path(args.n)
    elif args.kind == "glued":
        if args.m is None:
            raise ParseError("construct glued needs --m")
        u, v = _pair_for(h, args, budget)
        f = constructions.glued_family_labeling(
            args.m, args.p2, h, u, v, node_budget=budget
        )
        g = gen_glued_paths(args.m, args.p2)
    elif args.kind == "totaldom":
        if args.g is None:
            raise ParseError("construct totaldom needs --g")
        g = _load_graph(args.g, args.format)
        f = constructions.total_dom_labeling(g, h, args.k, node_budget=budget)
    else:  # couple
        if args.g is None:
            raise ParseError("construct couple needs --g")
        g = _load_graph(args.g, args.format)
        rdh = solvers.min_rainbow(h, args.k, node_budget=budget).value
        _, couple = couples.min_couple_cost(g, args.k, rdh, node_budget=budget)
        f = couples.couple_labeling(g, h, args.k, couple, node_budget=budget)
    prod, _ = products.lexicographic(g, h)
    if not labelings.is_k_rainbow_dominating(prod, f):
        raise RainbowDomError("internal check failed: construction invalid")
    _out(args, labelings.format_labeling(f))
    return 0


def _cmd_validate(args) -> int:
    g = _load_graph(args.graph, args.format)
    f = labelings.parse_labeling(Path(args.labeling).read_text(), args.k)
    if f.n != g.n:
        raise PreconditionError(
            f"labeling covers {f.n} vertices but the graph has {g.n}"
        )
    check = labelings.is_k_rainbow_dominating(g, f)
    if check.ok:
        print(f"valid: weight {f.weight}")
        return 0
    print(f"invalid: violator vertex {check.violator}")
    return 1


def _cmd_enumerate(args) -> int:
    if args.what == "graphs":
        if args.n is None:
            raise ParseError("enumerate graphs needs --n")
        for g in enumerate_connected_graphs(args.n):
            print(to_graph6(g))
        return 0
    if args.graph is None:
        raise ParseError("enumerate rdfs needs a graph argument")
    g = _load_graph(args.graph, args.format)
    count = 0
    for f in solvers.enumerate_min_2rdfs(g, args.cap, node_budget=args.budget):
        sys.stdout.write(labelings.format_labeling(f))
        print("--")
        count += 1
    print(f"count: {count}")
    return 0


def _cmd_verify(args) -> int:
    h_list = [_load_graph(part, args.format) for part in args.h.split(",")]
    report = certify_mod.verify_corpus(
        args.ng,
        h_list,
        args.cap,
        workers=args.workers,
        node_budget=args.budget,
        enum_product_cap=args.enum_product_cap,
        enum_cap=args.enum_cap,
    )
    sys.stdout.write(report.to_text())
    if args.json:
        Path(args.json).write_text(json.dumps(report.to_json_dict(), indent=2) + "\n")
    return 0 if report.ok else 1


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=["graph6", "edges"], default=None,
                   help="force the file format instead of autodetecting")
    p.add_argument("--budget", type=int, default=solvers.DEFAULT_NODE_BUDGET,
                   help="search node budget")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbowdom",
        description="Exact rainbow domination invariants, certified product "
        "values, and explicit labelings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariant", help="gamma, gamma_t, or k-rainbow number")
    p.add_argument("graph")
    p.add_argument("--type", choices=["gamma", "gammat", "rdk"], required=True)
    p.add_argument("--k", type=int, default=2)
    _add_common(p)
    p.set_defaults(func=_cmd_invariant)

    p = sub.add_parser("product", help="emit a product graph as graph6")
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("--kind", choices=["lex", "cart"], default="lex")
    _add_common(p)
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("certify", help="certificate for rd_2 of a lexicographic product")
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("--strict", action="store_true",
                   help="refuse disconnected second factors")
    p.add_argument("--no-refine", action="store_true",
                   help="skip the exact solve that tightens intervals")
    p.add_argument("--labeling-out", default=None,
                   help="also write the best labeling to this file")
    _add_common(p)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("construct", help="emit an explicit product labeling")
    p.add_argument("kind", choices=["tiles", "couple", "totaldom", "glued"])
    p.add_argument("--g", help="first factor (couple/totaldom)")
    p.add_argument("--h", required=True, help="second factor")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--n", type=int, help="path length (tiles)")
    p.add_argument("--m", type=int, help="arm count (glued)")
    p.add_argument("--p2", type=int, default=0, help="pendant count (glued)")
    p.add_argument("--u", type=int, default=None, help="pair-witness vertex u")
    p.add_argument("--v", type=int, default=None, help="pair-witness vertex v")
    p.add_argument("--out", default=None, help="write the labeling here")
    _add_common(p)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("validate", help="check a labeling file against a graph")
    p.add_argument("labeling")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, default=2)
    _add_common(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("enumerate", help="minimum 2-rainbow labelings, or the graph corpus")
    p.add_argument("what", choices=["rdfs", "graphs"])
    p.add_argument("graph", nargs="?", help="graph (rdfs)")
    p.add_argument("--n", type=int, help="vertex count (graphs)")
    p.add_argument("--cap", type=int, default=1000)
    _add_common(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="replay all certified claims on a corpus")
    p.add_argument("--ng", type=int, required=True)
    p.add_argument("--h", required=True, help="comma-separated second factors")
    p.add_argument("--cap", type=int, required=True,
                   help="largest product solved exactly")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--enum-product-cap", type=int, default=14)
    p.add_argument("--enum-cap", type=int, default=100000)
    p.add_argument("--json", default=None, help="write a JSON summary here")
    _add_common(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CapacityError, CapExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except RainbowDomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry():
    sys.exit(main())
