"""Command-line front end.

Every subcommand reads a graph file, runs one operation and prints a JSON
document (or writes it to ``--json``).  Exit codes: 0 success, 2 infeasible
with a certificate (or a failed ``verify``), 1 bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import __version__
from .chromatic import chi_gh, decompose_gh, list_decompose_gh
from .decompositions import (
    DecompositionResult,
    a_f_decompose,
    f_color,
    linear_arboricity_decompose,
    pa_f_decompose,
    pseudoarboricity,
)
from .graph import INF, DegreeFunction, FunctionPair, require_valid
from .io import parse_degree_function, parse_graph, parse_lists, parse_pair
from .oracle import (
    MAX_M_COLORS,
    MAX_M_ORIENT,
    SUBSET_FORMULAS,
    ClassPredicate,
    brute_min_colors,
    brute_orientable,
    subset_max,
    verify_classes,
)
from .orientation import Orientation, is_orientable

INFEASIBLE = 2
INPUT_ERROR = 1


class InputError(Exception):
    pass


def _read(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _bound(tok):
    return INF if tok.strip().lower() in ("inf", "infinity") else int(tok)


def load_pair(arg, n, default=None):
    """``--pair`` is a file of ``v g h`` lines or an inline constant ``g,h``."""
    if arg is None:
        if default is None:
            raise InputError("this subcommand needs --pair")
        return FunctionPair.constant(n, *default)
    if "," in arg:
        try:
            g, h = (_bound(t) for t in arg.split(","))
        except ValueError:
            raise InputError(f"bad inline pair {arg!r}; expected g,h") from None
        return FunctionPair.constant(n, g, h)
    return parse_pair(_read(arg), n)


def load_f(arg, n, default=None, minimum=1):
    """``--f`` is an integer constant or a file of ``v f`` lines."""
    if arg is None:
        if default is None:
            raise InputError("this subcommand needs --f")
        arg = str(default)
    try:
        return DegreeFunction.constant(n, int(arg), minimum)
    except ValueError as exc:
        if arg.lstrip("-").isdigit():
            raise InputError(str(exc)) from None
    return parse_degree_function(_read(arg), n, minimum=minimum)


def _coloring_doc(G, p, report, coloring):
    doc = report.to_json()
    doc.pop("probes")
    doc["kind"] = "gh-orientable"
    doc["pair"] = p.to_json()
    doc["classes"] = [
        {"label": c, "edges": es, "kind_witness": {"orientation": coloring.witnesses[c].to_json()}}
        for c, es in coloring.classes().items()
    ]
    return doc


def cmd_orient(G, args):
    p = load_pair(args.pair, G.n)
    res = is_orientable(G, p)
    if isinstance(res, Orientation):
        return 0, {"orientable": True, "orientation": res.to_json()}
    return INFEASIBLE, {"orientable": False, "certificate": res.to_json()}


def cmd_chi(G, args):
    p = load_pair(args.pair, G.n)
    doc = chi_gh(G, p).to_json()
    doc["pair"] = p.to_json()
    return 0, doc


def cmd_decompose(G, args):
    p = load_pair(args.pair, G.n)
    pc = require_valid(G, p)
    report = chi_gh(G, pc)
    return 0, _coloring_doc(G, pc, report, decompose_gh(G, pc, report))


def cmd_list_decompose(G, args):
    p = load_pair(args.pair, G.n)
    pc = require_valid(G, p)
    report = chi_gh(G, pc)
    if args.lists:
        lists = parse_lists(_read(args.lists), G.m)
    else:
        rng = random.Random(args.seed)
        palette = list(range(report.k + 2))
        lists = [tuple(sorted(rng.sample(palette, report.k))) for _ in range(G.m)]
    doc = _coloring_doc(G, pc, report, list_decompose_gh(G, pc, lists, report))
    doc["lists"] = [list(L) for L in lists]
    return 0, doc


def cmd_pa(G, args):
    return 0, pseudoarboricity(G).to_json()


def cmd_pa_f(G, args):
    return 0, pa_f_decompose(G, load_f(args.f, G.n, 2, minimum=2)).to_json()


def cmd_a_f(G, args):
    return 0, a_f_decompose(G, load_f(args.f, G.n, 2, minimum=2)).to_json()


def cmd_la(G, args):
    return 0, linear_arboricity_decompose(G).to_json()


def cmd_f_color(G, args):
    if args.mode is None:
        raise InputError("f-color needs --mode")
    f = load_f(args.f, G.n, minimum=1)
    return 0, f_color(G, f, args.mode).to_json()


def cmd_oracle(G, args):
    op = args.op
    if op == "orientable":
        p = load_pair(args.pair, G.n)
        ok = brute_orientable(G, p, max_m=args.max_m or MAX_M_ORIENT)
        return (0 if ok else INFEASIBLE), {"op": op, "orientable": ok}
    if op == "min-colors":
        kind = args.kind or "gh-orientable"
        if kind == "gh-orientable":
            pred = ClassPredicate(kind, pair=load_pair(args.pair, G.n))
        elif kind.startswith("degree-f"):
            pred = ClassPredicate(kind, f=load_f(args.f, G.n).f)
        else:
            pred = ClassPredicate(kind)
        value = brute_min_colors(G, pred, max_m=args.max_m or MAX_M_COLORS)
        return 0, {"op": op, "kind": kind, "value": value}
    if op == "subset-max":
        formula = args.formula or "pa"
        pair = load_pair(args.pair, G.n) if formula == "w_gh" else None
        f = load_f(args.f, G.n).f if formula in ("w_f", "half_f") else None
        value, S = subset_max(G, formula, pair=pair, f=f)
        return 0, {"op": op, "formula": formula, "value": value, "witness": None if S is None else list(S)}
    raise InputError(f"unknown oracle operation {op!r}")


def _pair_from_json(data):
    if data is None:
        return None
    return FunctionPair(tuple(_bound(str(x)) for x in data["g"]), tuple(_bound(str(x)) for x in data["h"]))


def cmd_verify(G, args):
    try:
        doc = json.loads(_read(args.result))
        result = DecompositionResult(
            doc["kind"],
            [c["edges"] for c in doc["classes"]],
            [c.get("kind_witness") for c in doc["classes"]],
            doc.get("bound"),
            _pair_from_json(doc.get("pair")),
            None if doc.get("f") is None else tuple(doc["f"]),
        )
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise InputError(f"{args.result} is not a decomposition document: {exc}") from None
    check = verify_classes(G, result)
    doc = {"ok": check.ok, "classes": len(result.classes)}
    if not check.ok:
        doc.update(offending_class=check.index, message=check.message)
    return (0 if check.ok else INFEASIBLE), doc


COMMANDS = {
    "orient": (cmd_orient, "decide (g,h)-orientability; orientation or certificate"),
    "chi-gh": (cmd_chi, "oriented chromatic index with its certificate (needs --pair)"),
    "decompose-gh": (cmd_decompose, "optimal (g,h)-oriented colouring (needs --pair)"),
    "list-decompose-gh": (cmd_list_decompose, "list version; --lists file or random lists from --seed"),
    "pa": (cmd_pa, "pseudoforest decomposition, pair (1,inf)"),
    "pa-f": (cmd_pa_f, "degree-f pseudoforests (--f, default 2)"),
    "a-f": (cmd_a_f, "degree-f forests (--f, default 2)"),
    "la": (cmd_la, "linear forests"),
    "f-color": (cmd_f_color, "degree-f subgraphs (--f and --mode required)"),
    "oracle": (cmd_oracle, "brute-force reference values"),
    "verify": (cmd_verify, "re-check a decomposition document"),
}


def build_parser():
    parser = argparse.ArgumentParser(prog="ghcolor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("version", help="print the version")
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text)
        if name == "oracle":
            sp.add_argument("op", choices=("orientable", "min-colors", "subset-max"))
            sp.add_argument("--kind", choices=("gh-orientable", "pseudoforest", "forest", "degree-f-pseudoforest",
                                               "degree-f-forest", "linear-forest", "matching", "degree-f-subgraph"))
            sp.add_argument("--formula", choices=SUBSET_FORMULAS)
        if name == "verify":
            sp.add_argument("result", help="JSON written by a decompose-style subcommand")
        sp.add_argument("--graph", required=True, help="graph file")
        sp.add_argument("--pair", help="file of 'v g h' lines, or inline g,h")
        sp.add_argument("--f", help="integer constant or file of 'v f' lines")
        sp.add_argument("--mode", choices=("bipartite", "even", "general"))
        sp.add_argument("--lists", help="list file, one line of colour tokens per edge")
        sp.add_argument("--json", help="write the JSON document here instead of stdout")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--max-m", type=int, default=None, help="oracle edge cap")
    return parser


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "version":
        print(__version__)
        return 0
    handler = COMMANDS[args.command][0]
    try:
        G = parse_graph(_read(args.graph))
        code, doc = handler(G, args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if args.json:
        try:
            with open(args.json, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.json}: {exc.strerror}", file=sys.stderr)
            return INPUT_ERROR
    else:
        sys.stdout.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
