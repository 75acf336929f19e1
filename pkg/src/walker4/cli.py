"""Command-line front end.

    walker4 report   --metric cfg.toml [--point x1,x2,x3,x4] [--format text|structured]
    walker4 classify --metric cfg.toml [--count N] [--seed S] [--tol T] [--format ...]
    walker4 verify   [--trials N] [--seed S] [--degree D] [--format ...]

Exit codes: 0 the command ran (classification verdicts are results, not
errors), 1 configuration error, 2 a formula deviation beyond tolerance in
``verify`` (the audited printed-Weyl slots are reported but never gate).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from . import report as report_fmt
from .classify import classify_metric
from .config import ConfigError, load_config
from .metric import inverse_metric
from .pack import curvature_pack
from .tensors import PAIRS, pair_label
from .verify import GATED, PROPERTY_KEYS, run_verification

_FORMAT_VERSION = "walker4.report/1"


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        tree = args.handler(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    if args.format == "structured":
        sys.stdout.write(report_fmt.dumps(tree))
    else:
        _render_text(tree)
    if args.command == "verify" and not tree["verify"]["passed"]:
        return 2
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="walker4",
        description="Curvature reports, classification and formula audit for "
        "restricted four-dimensional Walker metrics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_report = sub.add_parser("report", help="print every tensor at one point")
    p_report.add_argument("--metric", required=True, help="metric config file (TOML)")
    p_report.add_argument("--point", default="0,0,0,0", help="comma-separated u1,u2,u3,u4")
    p_report.add_argument("--format", choices=("text", "structured"), default="text")
    p_report.set_defaults(handler=_cmd_report)

    p_classify = sub.add_parser("classify", help="run every condition check")
    p_classify.add_argument("--metric", required=True, help="metric config file (TOML)")
    p_classify.add_argument("--count", type=int, help="sample point count override")
    p_classify.add_argument("--seed", type=int, help="sample seed override")
    p_classify.add_argument("--tol", type=float, help="tolerance override")
    p_classify.add_argument("--format", choices=("text", "structured"), default="text")
    p_classify.set_defaults(handler=_cmd_classify)

    p_verify = sub.add_parser("verify", help="audit component formulas against the oracle")
    p_verify.add_argument("--trials", type=int, default=100)
    p_verify.add_argument("--seed", type=int, default=1)
    p_verify.add_argument("--degree", type=int, default=3)
    p_verify.add_argument("--points", type=int, default=20, help="points per trial")
    p_verify.add_argument("--format", choices=("text", "structured"), default="text")
    p_verify.set_defaults(handler=_cmd_verify)
    return parser


def _parse_point(text: str):
    parts = text.split(",")
    if len(parts) != 4:
        raise ConfigError(f"--point expects 4 comma-separated numbers, got {text!r}")
    try:
        return tuple(float(p) for p in parts)
    except ValueError:
        raise ConfigError(f"--point expects numbers, got {text!r}")


def _metric_echo(metric) -> dict:
    return {
        "name": metric.name or "unnamed",
        "a": metric.a.describe(),
        "b": metric.b.describe(),
        "c": metric.c.describe(),
    }


def _matrix_entries(m, symbol) -> dict:
    out = {}
    for i in range(4):
        for j in range(i, 4):
            out[f"{symbol}_{i + 1}{j + 1}"] = float(m[i, j])
    return out


def _pair_matrix(tensor) -> dict:
    out = {}
    for pi, pq in enumerate(PAIRS):
        row = [float(tensor.m[pi, pj]) for pj in range(6)]
        out[f"row_{pair_label(*pq)}"] = row
    return out


def _cmd_report(args) -> dict:
    cfg = load_config(args.metric)
    point = _parse_point(args.point)
    pack = curvature_pack(cfg.metric, point)

    tree = {
        "format": _FORMAT_VERSION,
        "command": "report",
        "metric": _metric_echo(cfg.metric),
        "point": list(point),
        "metric_matrix": _matrix_entries(pack.at.g, "g"),
        "inverse_matrix": _matrix_entries(inverse_metric(pack.at), "ginv"),
        "connection": pack.connection.nonzero_components(tol=0.0),
        "curvature": {
            "components": pack.curvature.nonzero_components(0.0, "R"),
            "pair_matrix": _pair_matrix(pack.curvature),
        },
        "ricci": _matrix_entries(pack.ricci.rho, "rho"),
        "scalar_curvature": pack.ricci.sc,
        "einstein": _matrix_entries(pack.ricci.einstein, "G"),
        "weyl": {
            "components": pack.weyl.nonzero_components(0.0, "W"),
            "pair_matrix": _pair_matrix(pack.weyl),
        },
        "nabla_r": {"max_abs": pack.nabla_r.max_abs()},
        "diagnostics": dict(pack.diagnostics),
    }
    return tree


def _cmd_classify(args) -> dict:
    cfg = load_config(args.metric)
    plan = cfg.plan
    overrides = {}
    if args.count is not None:
        overrides["count"] = args.count
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.tol is not None:
        overrides["tolerance"] = args.tol
    if overrides:
        try:
            plan = replace(plan, **overrides)
        except ValueError as exc:
            raise ConfigError(str(exc))
    rep = classify_metric(cfg.metric, plan)

    entries = {}
    for e in rep.entries:
        entry = {"residual": e.residual, "verdict": e.verdict}
        if e.witness is not None:
            entry["witness"] = [float(x) for x in e.witness]
        for k, v in sorted(e.extras.items()):
            entry[k] = v
        if e.warnings:
            entry["warnings"] = list(e.warnings)
        entries[e.name] = entry
    tree = {
        "format": _FORMAT_VERSION,
        "command": "classify",
        "metric": _metric_echo(cfg.metric),
        "plan": {
            "count": plan.count,
            "seed": plan.seed,
            "box": [plan.box[0], plan.box[1]],
            "tolerance": plan.tolerance,
        },
        "classification": entries,
    }
    if rep.warnings:
        tree["warnings"] = list(rep.warnings)
    return tree


def _cmd_verify(args) -> dict:
    res = run_verification(
        trials=args.trials,
        seed=args.seed,
        degree=args.degree,
        points_per_trial=args.points,
    )
    tree = {
        "format": _FORMAT_VERSION,
        "command": "verify",
        "verify": {
            "trials": res.trials,
            "seed": res.seed,
            "degree": res.degree,
            "points_per_trial": res.points_per_trial,
            "tolerance": res.tolerance,
            "passed": res.passed,
        },
        "deviations": {k: res.deviations[k] for k in GATED},
        "properties": {k: res.properties[k] for k in PROPERTY_KEYS},
        "printed_weyl_audit": {
            k: res.printed_weyl_audit[k] for k in sorted(res.printed_weyl_audit)
        },
        "printed_weyl_model_residual": res.printed_weyl_model_residual,
    }
    return tree


def _render_text(tree: dict, indent: int = 0) -> None:
    pad = "  " * indent
    for key, value in tree.items():
        if isinstance(value, dict):
            print(f"{pad}{key}:")
            _render_text(value, indent + 1)
        elif isinstance(value, list) and value and isinstance(value[0], str):
            print(f"{pad}{key}:")
            for item in value:
                print(f"{pad}  - {item}")
        elif isinstance(value, list):
            rendered = ", ".join(_format_number(v) for v in value)
            print(f"{pad}{key} = [{rendered}]")
        else:
            print(f"{pad}{key} = {_format_number(value)}")


def _format_number(v):
    if isinstance(v, float):
        return f"{v:.12g}"
    return v


if __name__ == "__main__":
    raise SystemExit(main())
