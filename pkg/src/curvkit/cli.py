"""Command-line front end.

Verbs: compute (tensor dumps), check (identity verdicts with witnesses),
classify (structure report), compare (side-by-side reports), catalog list.

Exit codes: 0 success / identity holds, 1 identity fails, 2 input error,
3 degenerate metric.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .expr import ExprError, format_expression
from .parsing import (
    parse_metric_file, parse_identity, DegenerateMetricError,
    TENSOR_VALENCE, TName, TDot, TQ, TNabla)
from .tensor import Tensor, D_SYM2, format_dump
from .curvature import CurvatureBundle
from .operators import check_identity, evaluate_tensor_ast
from .classify import classify, compare_reports

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_INPUT = 2
EXIT_DEGENERATE = 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


def default_catalog_dir() -> Path:
    env = os.environ.get("CURVKIT_CATALOG_DIR")
    if env:
        return Path(env)
    local = Path.cwd() / "catalog"
    if local.is_dir():
        return local
    return Path(__file__).resolve().parents[2] / "catalog"


def resolve_metric_path(arg: str) -> Path:
    p = Path(arg)
    if p.is_file():
        return p
    name = arg if arg.endswith(".metric") else arg + ".metric"
    candidate = default_catalog_dir() / name
    if candidate.is_file():
        return candidate
    raise CliError(f"metric not found: {arg}")


def load_bundle(arg: str) -> CurvatureBundle:
    path = resolve_metric_path(arg)
    try:
        spec = parse_metric_file(path.read_text())
    except DegenerateMetricError as e:
        raise CliError(str(e), EXIT_DEGENERATE)
    except ExprError as e:
        raise CliError(f"{path}: {e}")
    return CurvatureBundle(spec)


def _brackets(component) -> str:
    return "".join(f"[{i + 1}]" for i in component)


# -- compute ----------------------------------------------------------------

def _inverse_metric_tensor(bundle: CurvatureBundle) -> Tensor:
    n = bundle.dim
    comps = {}
    for i in range(n):
        for j in range(i, n):
            v = bundle.metric.upper(i, j)
            if not v.is_zero:
                comps[(i, j)] = v
    return Tensor(bundle.chart, 2, D_SYM2, comps)


def _gamma_lines(bundle: CurvatureBundle, fmt: str) -> str:
    import json
    conn = bundle.connection
    n = bundle.dim
    rows = []
    for l in range(n):
        for i in range(n):
            for j in range(i, n):
                v = conn.gamma[l][i][j]
                if v.is_zero:
                    continue
                if fmt == "text":
                    rows.append(f"gamma[{l + 1}][{i + 1}][{j + 1}] = "
                                f"{format_expression(v)}")
                else:
                    rows.append(json.dumps(
                        {"tensor": "gamma", "index": [l + 1, i + 1, j + 1],
                         "value": format_expression(v)},
                        separators=(",", ":")))
    return "\n".join(rows)


def _parse_compute_name(name: str):
    """Map a compute argument to a display name and a tensor AST node."""
    if name.startswith("nabla:"):
        base = name[6:]
        if base not in TENSOR_VALENCE:
            raise CliError(f"unknown tensor in {name!r}")
        return f"nabla {base}", TNabla(TName(base))
    if name.startswith("dot:"):
        parts = name[4:].split(".")
        if len(parts) != 2 or not all(p in TENSOR_VALENCE for p in parts):
            raise CliError(f"malformed dot operand {name!r}")
        return f"{parts[0]}.{parts[1]}", TDot(TName(parts[0]), TName(parts[1]))
    if name.startswith("Q:"):
        parts = name[2:].split(".")
        if len(parts) != 2 or not all(p in TENSOR_VALENCE for p in parts):
            raise CliError(f"malformed Q operand {name!r}")
        return f"Q({parts[0]},{parts[1]})", TQ(TName(parts[0]), TName(parts[1]))
    if name in TENSOR_VALENCE:
        return name, TName(name)
    raise CliError(f"unknown tensor name {name!r}")


def cmd_compute(args) -> int:
    bundle = load_bundle(args.metric)
    fmt = args.dump_format
    if args.name == "kappa":
        if fmt == "text":
            out = f"kappa = {format_expression(bundle.kappa)}"
        else:
            import json
            out = json.dumps({"scalar": "kappa",
                              "value": format_expression(bundle.kappa)},
                             separators=(",", ":"))
    elif args.name == "ginv":
        out = format_dump("ginv", _inverse_metric_tensor(bundle), fmt)
    elif args.name == "gamma":
        out = _gamma_lines(bundle, fmt)
    else:
        display, node = _parse_compute_name(args.name)
        try:
            tensor = evaluate_tensor_ast(node, bundle, {})
        except ExprError as e:
            raise CliError(str(e))
        out = format_dump(display, tensor, fmt)
    if args.output:
        Path(args.output).write_text(out + ("\n" if out else ""))
    elif out:
        print(out)
    return EXIT_HOLDS


# -- check ------------------------------------------------------------------

def cmd_check(args) -> int:
    bundle = load_bundle(args.metric)
    try:
        ast = parse_identity(args.identity, bundle.chart)
        result = check_identity(ast, bundle)
    except ExprError as e:
        raise CliError(str(e))
    print(f"identity: {args.identity}")
    if result.holds:
        print("verdict: holds")
        for u in sorted(result.solved or ()):
            print(f"{u} = {format_expression(result.solved[u])}")
        if result.free:
            print(f"free: {', '.join(result.free)}")
        return EXIT_HOLDS
    print("verdict: fails")
    w = result.witness
    if w is not None:
        if w.kind == "ratio":
            print(f"witness: component {_brackets(w.anchor_component)} "
                  f"requires {w.unknown} = {format_expression(w.anchor_value)}")
            print(f"witness: component {_brackets(w.component)} "
                  f"requires {w.unknown} = {format_expression(w.value)}")
        else:
            print(f"witness: component {_brackets(w.component)} = "
                  f"{format_expression(w.value)}")
    return EXIT_FAILS


# -- classify / compare / catalog -------------------------------------------

def cmd_classify(args) -> int:
    bundle = load_bundle(args.metric)
    sys.stdout.write(classify(bundle).render())
    return EXIT_HOLDS


def cmd_compare(args) -> int:
    left = classify(load_bundle(args.metric1))
    right = classify(load_bundle(args.metric2))
    sys.stdout.write(compare_reports(left, right))
    return EXIT_HOLDS


def cmd_catalog(args) -> int:
    directory = default_catalog_dir()
    if not directory.is_dir():
        raise CliError(f"catalog directory not found: {directory}")
    for path in sorted(directory.glob("*.metric")):
        print(path.stem)
    return EXIT_HOLDS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvkit",
        description="symbolic curvature workbench for coordinate metrics")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="dump a tensor, scalar or connection")
    p.add_argument("metric", help="metric file path or catalog name")
    p.add_argument("name", help="g, ginv, gamma, kappa, R, S, C, P, W, K, G, "
                                "T, nabla:<T>, dot:<A>.<B>, Q:<A>.<B>")
    p.add_argument("-o", "--output", help="write the dump to a file")
    p.add_argument("--dump-format", choices=("text", "json-lines"),
                   default="text")
    p.set_defaults(run=cmd_compute)

    p = sub.add_parser("check", help="decide a tensor identity")
    p.add_argument("metric")
    p.add_argument("identity", help='e.g. "C.C = L*Q(g,C)"')
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("classify", help="full structure report")
    p.add_argument("metric")
    p.set_defaults(run=cmd_classify)

    p = sub.add_parser("compare", help="side-by-side structure reports")
    p.add_argument("metric1")
    p.add_argument("metric2")
    p.set_defaults(run=cmd_compare)

    p = sub.add_parser("catalog", help="catalog operations")
    p.add_argument("action", choices=("list",))
    p.set_defaults(run=cmd_catalog)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code


if __name__ == "__main__":
    sys.exit(main())
