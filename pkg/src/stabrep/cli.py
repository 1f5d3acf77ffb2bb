"""Command-line entry point: every subcommand prints one JSON document.

Exit codes: 0 on success, 1 when the computation refuses (resource guard,
category mismatch), 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from . import __version__
from .charring import FiniteClass
from .diagrams import DiagramError, compose, diagram_from_json, diagram_to_json
from .krings import (
    CategoryError, KClass, LabeledGraph, SimpleLabel, comultiply, ext_dim,
    format_label, littlewood_complex, lr_graph_eval, parse_label, polarize,
    restrict, same_block, stable_tensor,
)
from .partitions import parse
from .schur_weyl import ResourceError, centralizer_check
from .specialize import (
    derived_specialize_sym, euler_specialize, finite_tensor_via_stable,
    specialize_simple,
)
from .symfunc import kronecker, lr_coeff, stable_kronecker


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _partition(text: str):
    try:
        return parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _label(cat: str, text: str) -> SimpleLabel:
    try:
        return parse_label(cat, text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _finite_json(x: FiniteClass) -> dict:
    return {"group": str(x.group),
            "terms": [{"label": list(k), "mult": v} for k, v in x.sorted_terms()],
            "genuine": x.is_genuine()}


def _osp_cat(cat: str, variant: Optional[str]) -> tuple[str, Optional[str]]:
    # "o" and "sp" are accepted as shorthands for the osp ring with a reading
    if cat in ("o", "sp"):
        return "osp", cat
    return cat, variant


# ---------------------------------------------------------------------------
# subcommands


def cmd_lr(args) -> Any:
    return lr_coeff(_partition(args.lam), _partition(args.mu), _partition(args.nu))


def cmd_kron(args) -> Any:
    shapes = [_partition(x) for x in (args.lam, args.mu, args.nu)]
    if args.stable:
        return stable_kronecker(*shapes)
    return kronecker(*shapes)


def cmd_tensor(args) -> Any:
    x, y = _label(args.cat, args.x), _label(args.cat, args.y)
    return stable_tensor(KClass.simple(x), KClass.simple(y)).to_json()


def cmd_comult(args) -> Any:
    cat, variant = _osp_cat(args.cat, args.variant)
    x = _label(cat, args.x)
    terms = comultiply(KClass.simple(x), variant)
    rows = [{"left": format_label(cat, a), "right": format_label(cat, b), "mult": m}
            for (a, b), m in terms.items()]
    return sorted(rows, key=lambda r: (len(r["left"]) + len(r["right"]), r["left"], r["right"]))


def cmd_restrict(args) -> Any:
    return restrict(KClass.simple(_label("gl", args.x)), args.variant).to_json()


def cmd_polarize(args) -> Any:
    return polarize(KClass.simple(_label("osp", args.x)), args.variant).to_json()


def cmd_ext(args) -> Any:
    cat, variant = _osp_cat(args.cat, args.variant)
    return ext_dim(_label(cat, args.source), _label(cat, args.target), args.degree, variant)


def cmd_blocks(args) -> Any:
    cat, _ = _osp_cat(args.cat, None)
    return same_block(_label(cat, args.a), _label(cat, args.b))


def cmd_graph(args) -> Any:
    obj = _load_json(args.json_in)
    try:
        n = int(obj["vertices"])
        edges = tuple((int(i), int(j), _partition(lab)) for i, j, lab in obj["edges"])
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed graph JSON: {exc}") from None
    try:
        graph = LabeledGraph(tuple(range(n)), edges)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return lr_graph_eval(graph)


def cmd_resolve(args) -> Any:
    cat, variant = _osp_cat(args.cat, args.variant)
    x = _label(cat, args.x)
    levels = littlewood_complex(x, variant)
    out = []
    for level in levels:
        klass = KClass(cat, level)
        out.append(klass.to_json()["terms"])
    return out


def cmd_diagram_compose(args) -> Any:
    obj = _load_json(args.json_in)
    if not isinstance(obj, list) or len(obj) != 2:
        raise UsageError("expected a JSON list of two diagrams")
    try:
        a, b = (diagram_from_json(x) for x in obj)
    except DiagramError as exc:
        raise UsageError(str(exc)) from None
    comp = compose(a, b)
    return {"diagram": diagram_to_json(comp.diagram), "loops": comp.loops, "sign": comp.sign}


def cmd_centralizer(args) -> Any:
    image, commutant = centralizer_check(args.kind, args.n, args.rank, args.m)
    return {"dim_image": image, "dim_commutant": commutant}


def cmd_specialize(args) -> Any:
    cat, variant = _osp_cat(args.cat, args.variant)
    if cat == "sym":
        if args.tensor:
            raise UsageError("--tensor is not available for sym")
        res = derived_specialize_sym(_partition(args.x), args.rank)
        if res.is_zero:
            return {"zero": True}
        return {"zero": False, "degree": res.degree, "label": list(res.label)}
    if args.tensor:
        if args.y is None:
            raise UsageError("--tensor needs two labels")
        x, y = _label(cat, args.x), _label(cat, args.y)
        return _finite_json(finite_tensor_via_stable(x, y, args.rank))
    if args.y is not None:
        raise UsageError("a second label needs --tensor")
    x = _label(cat, args.x)
    degree0 = specialize_simple(x, args.rank, variant)
    return {"degree0": None if degree0 is None else list(degree0),
            "euler": _finite_json(euler_specialize(x, args.rank, variant or "sp"))}


# ---------------------------------------------------------------------------
# parser

CATS = ["glpol", "ga", "gl", "osp", "sym"]


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="stabrep", description="Stable representation theory computations.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("lr", help="Littlewood-Richardson coefficient c^lam_{mu,nu}")
    s.add_argument("lam")
    s.add_argument("mu")
    s.add_argument("nu")
    s.set_defaults(func=cmd_lr)

    s = sub.add_parser("kron", help="Kronecker coefficient (or stable one with --stable)")
    s.add_argument("lam")
    s.add_argument("mu")
    s.add_argument("nu")
    s.add_argument("--stable", action="store_true")
    s.set_defaults(func=cmd_kron)

    s = sub.add_parser("tensor", help="stable tensor product of two simples")
    s.add_argument("--cat", required=True, choices=CATS)
    s.add_argument("x")
    s.add_argument("y")
    s.set_defaults(func=cmd_tensor)

    s = sub.add_parser("comult", help="coproduct of a simple")
    s.add_argument("--cat", required=True, choices=["gl", "osp", "o", "sp"])
    s.add_argument("--variant", choices=["o", "sp"])
    s.add_argument("x")
    s.set_defaults(func=cmd_comult)

    s = sub.add_parser("restrict", help="restrict a gl simple to O or Sp")
    s.add_argument("--variant", required=True, choices=["o", "sp"])
    s.add_argument("x")
    s.set_defaults(func=cmd_restrict)

    s = sub.add_parser("polarize", help="polarize an O or Sp simple to gl")
    s.add_argument("--variant", required=True, choices=["o", "sp"])
    s.add_argument("x")
    s.set_defaults(func=cmd_polarize)

    s = sub.add_parser("ext", help="dimension of Ext^i between simples")
    s.add_argument("--cat", required=True, choices=["gl", "osp", "o", "sp", "ga"])
    s.add_argument("--variant", choices=["o", "sp"])
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("source")
    s.add_argument("target")
    s.set_defaults(func=cmd_ext)

    s = sub.add_parser("blocks", help="whether two simples share a block")
    s.add_argument("--cat", required=True, choices=["gl", "osp", "o", "sp", "ga"])
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_blocks)

    s = sub.add_parser("graph", help="evaluate an LR-labelled graph")
    s.add_argument("--json-in", required=True)
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("resolve", help="Littlewood complex of a simple")
    s.add_argument("--cat", required=True, choices=["gl", "osp", "o", "sp", "ga"])
    s.add_argument("--variant", choices=["o", "sp"])
    s.add_argument("x")
    s.set_defaults(func=cmd_resolve)

    s = sub.add_parser("diagram-compose", help="compose two diagrams given as a JSON list")
    s.add_argument("--json-in", required=True)
    s.set_defaults(func=cmd_diagram_compose)

    s = sub.add_parser("centralizer", help="image and commutant dimensions on tensor space")
    s.add_argument("--kind", required=True,
                   choices=["brauer", "signed_brauer", "walled_brauer", "set_partition"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, default=0)
    s.add_argument("--rank", type=int, required=True)
    s.set_defaults(func=cmd_centralizer)

    s = sub.add_parser("specialize", help="(derived) specialization to finite rank")
    s.add_argument("--cat", required=True, choices=["gl", "osp", "sp", "sym"])
    s.add_argument("--variant", choices=["o", "sp"])
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--tensor", action="store_true")
    s.add_argument("x")
    s.add_argument("y", nargs="?")
    s.set_defaults(func=cmd_specialize)
    return p


def _inputs(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "command")}


def _emit(stream, obj) -> None:
    stream.write(json.dumps(obj, sort_keys=True, ensure_ascii=False) + "\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        result = args.func(args)
    except UsageError as exc:
        _emit(sys.stderr, {"error": {"kind": "usage", "message": str(exc)}})
        return 2
    except (ArithmeticError, CategoryError, DiagramError, ResourceError, ValueError) as exc:
        _emit(sys.stderr, {"error": {"kind": "computation", "message": str(exc)}})
        return 1
    meta = {"version": __version__, "subcommand": args.command, "inputs": _inputs(args)}
    _emit(sys.stdout, {"result": result, "meta": meta})
    return 0


if __name__ == "__main__":
    sys.exit(main())
