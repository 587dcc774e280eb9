"""Command-line front end: document I/O, reports, and grid exports.

Subcommands wrap the library pipelines one-to-one: ``analyze`` for the
separation/Carleson invariants, ``decompose`` for the fitted splitting,
``interpolate`` for the minimal-norm solver, ``verify-theorem`` for the
full bound chain, ``counterexample`` for the near-collision family, and
``field`` for CSV export of log-modulus grids.

Reports are JSON with fixed field order and 17-significant-digit floats,
so identical inputs produce byte-identical output.  Point sets travel as
``{"schema_version": 1, "label": ..., "points": [{"re": ..., "im": ...}]}``
documents.  Exit codes: 0 success, 1 domain or hypothesis failure,
2 numerical fault, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
from dataclasses import dataclass, fields, replace

import numpy as np

from .blaschke import PointSequence, analyze, blaschke_log_modulus
from .errors import DomainError, NumericalError
from .harness import (
    CounterexampleSpec,
    generate_counterexample,
    verify_theorem_chain,
    zero_one_problem,
)
from .hoffman import Decomposition, corresponding_decomposition, decompose
from .pick import (
    PickProblem,
    interpolant_eval,
    min_norm,
    solve_pick,
)

log = logging.getLogger("diskinterp")

# Grid cells within this Euclidean radius of a zero export as NaN.
_FIELD_ZERO_RADIUS = 1e-6

# Field grids cover |z| < this radius.
_FIELD_RADIUS = 0.999

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_NUMERICAL = 2
EXIT_USAGE = 64


class UsageError(Exception):
    """Malformed invocation: bad flags, bad config, or inconsistent arguments."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class RunConfig:
    """Numerical knobs shared by every subcommand."""

    grid_resolution: int = 128
    boundary_grid: int = 4096
    psd_tol: float = 1e-10
    bisect_rel_tol: float = 1e-8
    seed: int = 0
    output_path: str = ""

    def __post_init__(self):
        if not 32 <= self.grid_resolution <= 4096:
            raise UsageError(
                f"grid_resolution must lie in [32, 4096], got {self.grid_resolution}"
            )
        if not 32 <= self.boundary_grid <= 4096:
            raise UsageError(
                f"boundary_grid must lie in [32, 4096], got {self.boundary_grid}"
            )
        if self.psd_tol <= 0 or self.bisect_rel_tol <= 0:
            raise UsageError("tolerances must be positive")


def load_config(path: str | None, overrides: dict) -> RunConfig:
    """Defaults, overlaid by an optional JSON config file, then by flags."""
    cfg = RunConfig()
    if path:
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {path}: {exc}") from None
        if not isinstance(data, dict):
            raise UsageError(f"config {path} must hold a JSON object")
        known = {f.name for f in fields(RunConfig)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(unknown)}")
        cfg = replace(cfg, **data)
    live = {k: v for k, v in overrides.items() if v is not None}
    if live:
        cfg = replace(cfg, **live)
    return cfg


def _fmt_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        return "null"
    return format(float(x), ".17g")


def _emit_json(value, indent: int = 0) -> str:
    """Deterministic JSON: insertion order kept, floats at 17 digits."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return _fmt_float(float(value))
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, dict):
        if not value:
            return "{}"
        rows = [
            f"{inner}{json.dumps(str(k))}: {_emit_json(v, indent + 1)}"
            for k, v in value.items()
        ]
        return "{\n" + ",\n".join(rows) + f"\n{pad}}}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        rows = [f"{inner}{_emit_json(v, indent + 1)}" for v in value]
        return "[\n" + ",\n".join(rows) + f"\n{pad}]"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _cplx(z: complex) -> dict:
    return {"re": float(z.real), "im": float(z.imag)}


def sequence_to_document(seq: PointSequence) -> dict:
    return {
        "schema_version": 1,
        "label": seq.label or "",
        "points": [_cplx(z) for z in seq.points],
    }


def parse_point_document(data: dict) -> PointSequence:
    """Validate a parsed document and build the sequence it describes."""
    if not isinstance(data, dict):
        raise DomainError("point document must be a JSON object")
    if data.get("schema_version") != 1:
        raise DomainError(
            f"unsupported schema_version {data.get('schema_version')!r}"
        )
    points = data.get("points")
    if not isinstance(points, list) or not points:
        raise DomainError("point document needs a nonempty 'points' array")
    values = []
    for i, rec in enumerate(points):
        if not isinstance(rec, dict) or "re" not in rec or "im" not in rec:
            raise DomainError(f"point {i}: expected an object with 're' and 'im'")
        re_part, im_part = rec["re"], rec["im"]
        if not isinstance(re_part, (int, float)) or not isinstance(im_part, (int, float)):
            raise DomainError(f"point {i}: 're' and 'im' must be numbers")
        values.append(complex(float(re_part), float(im_part)))
    label = data.get("label")
    if label is not None and not isinstance(label, str):
        raise DomainError("'label' must be a string when present")
    return PointSequence(np.asarray(values, dtype=complex), label=label or "")


def load_point_document(path: str) -> PointSequence:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise DomainError(f"{path} is not valid JSON: {exc}") from None
    return parse_point_document(data)


def _write_text(cfg: RunConfig, text: str) -> None:
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
        log.info("wrote %s", cfg.output_path)
    else:
        sys.stdout.write(text)


def _decomposition_dict(dec: Decomposition) -> dict:
    return {
        "part0": list(dec.part0),
        "part1": list(dec.part1),
        "delta": dec.delta,
        "fitted_a": dec.fitted_a,
        "fitted_b": dec.fitted_b,
        "fit_grid_size": dec.fit_grid_size,
        "fit_grid_resolution": dec.fit_grid_resolution,
        "worst_point": _cplx(dec.worst_point),
    }


def _rows_dict(rows) -> list:
    return [
        {
            "point": _cplx(r.point),
            "value": r.value,
            "bound": r.bound,
            "margin": r.margin,
            "passed": r.passed,
        }
        for r in rows
    ]


def chain_report_dict(report) -> dict:
    return {
        "hypothesis_ok": report.hypothesis_ok,
        "delta": report.delta,
        "c": report.c,
        "eta": report.eta,
        "c_g": report.c_g,
        "eta_g": report.eta_g,
        "fitted_a": report.fitted_a,
        "fitted_b": report.fitted_b,
        "carleson_direct": report.carleson_direct,
        "hard_steps_pass": report.hard_steps_pass,
        "step_a": _rows_dict(report.step_a),
        "step_b": _rows_dict(report.step_b),
        "step_c": _rows_dict(report.step_c),
        "final": _rows_dict(report.final),
    }


def cmd_analyze(args, cfg: RunConfig) -> int:
    seq = load_point_document(args.input)
    report = analyze(seq)
    log.info("analyzed %d points", len(seq))
    doc = {
        "label": seq.label or "",
        "count": len(seq),
        "blaschke_sum": report.blaschke_sum,
        "separation_constant": report.separation_constant,
        "carleson_constant": report.carleson_constant,
        "per_point": [
            {"index": int(i), "modulus": float(v)} for i, v in report.per_point
        ],
    }
    _write_text(cfg, _emit_json(doc) + "\n")
    return EXIT_OK


def cmd_decompose(args, cfg: RunConfig) -> int:
    seq = load_point_document(args.input)
    if args.delta is not None:
        dec = decompose(seq, args.delta, cfg.grid_resolution)
    else:
        dec = corresponding_decomposition(seq, cfg.grid_resolution)
    _write_text(cfg, _emit_json(_decomposition_dict(dec)) + "\n")
    return EXIT_OK


def _parse_targets(raw: str, count: int) -> np.ndarray:
    toks = [t.strip() for t in raw.split(",")]
    try:
        values = [complex(t) for t in toks]
    except ValueError:
        raise UsageError(f"cannot parse targets {raw!r} as complex numbers") from None
    if len(values) != count:
        raise UsageError(f"{len(values)} targets for {count} points")
    return np.asarray(values, dtype=complex)


def cmd_interpolate(args, cfg: RunConfig) -> int:
    seq = load_point_document(args.input)
    targets = _parse_targets(args.targets, len(seq))
    problem = PickProblem(seq, targets)
    solution = solve_pick(
        problem, rel_tol=cfg.bisect_rel_tol, psd_tol=cfg.psd_tol
    )
    f = solution.interpolant
    residuals = [
        interpolant_eval(f, z) - w for z, w in zip(seq.points, targets)
    ]
    doc = {
        "label": seq.label or "",
        "min_norm": solution.min_norm,
        "scale": f.scale,
        "feasibility_margin": solution.feasibility_margin,
        "max_abs_residual": max(abs(r) for r in residuals),
        "residuals": [_cplx(r) for r in residuals],
        "schur_parameters": [_cplx(p) for _, p in f.schur_steps],
    }
    _write_text(cfg, _emit_json(doc) + "\n")
    if args.boundary_csv:
        thetas = np.linspace(0.0, 2.0 * math.pi, cfg.boundary_grid, endpoint=False)
        vals = interpolant_eval(f, np.exp(1j * thetas))
        lines = ["theta,re,im,modulus"]
        for t, v in zip(thetas, vals):
            lines.append(
                f"{_fmt_float(t)},{_fmt_float(v.real)},"
                f"{_fmt_float(v.imag)},{_fmt_float(abs(v))}"
            )
        with open(args.boundary_csv, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify_theorem(args, cfg: RunConfig) -> int:
    seq = load_point_document(args.input)
    report = verify_theorem_chain(
        seq,
        grid_resolution=cfg.grid_resolution,
        boundary_grid=cfg.boundary_grid,
        psd_tol=cfg.psd_tol,
        rel_tol=cfg.bisect_rel_tol,
    )
    _write_text(cfg, _emit_json(chain_report_dict(report)) + "\n")
    if not report.hypothesis_ok:
        return EXIT_DOMAIN
    if not report.hard_steps_pass:
        return EXIT_NUMERICAL
    return EXIT_OK


def cmd_counterexample(args, cfg: RunConfig) -> int:
    runs = []
    for gap in args.gap:
        spec = CounterexampleSpec(
            num_pairs=args.pairs, gap=gap, base_radial_ratio=args.ratio
        )
        seq, dec = generate_counterexample(spec, cfg.grid_resolution)
        report = analyze(seq)
        norm = min_norm(
            zero_one_problem(dec), rel_tol=cfg.bisect_rel_tol, psd_tol=cfg.psd_tol
        )
        runs.append(
            {
                "gap": gap,
                "document": sequence_to_document(seq),
                "decomposition": _decomposition_dict(dec),
                "summary": {
                    "separation_constant": report.separation_constant,
                    "carleson_constant": report.carleson_constant,
                    "zero_one_min_norm": norm,
                },
            }
        )
        log.info(
            "gap %g: separation %g, min_norm %g",
            gap, report.separation_constant, norm,
        )
    _write_text(cfg, _emit_json({"runs": runs}) + "\n")
    return EXIT_OK


def cmd_field(args, cfg: RunConfig) -> int:
    seq = load_point_document(args.input)
    if args.which == "B":
        product = seq
    else:
        if args.delta is not None:
            dec = decompose(seq, args.delta, cfg.grid_resolution)
        else:
            dec = corresponding_decomposition(seq, cfg.grid_resolution)
        product = dec.part_sequence(0 if args.which == "B0" else 1)
    xs = np.linspace(-_FIELD_RADIUS, _FIELD_RADIUS, cfg.grid_resolution)
    X, Y = np.meshgrid(xs, xs)
    pts = (X + 1j * Y).ravel()
    pts = pts[np.abs(pts) < _FIELD_RADIUS]
    near_zero = np.min(
        np.abs(pts[None, :] - product.points[:, None]), axis=0
    ) < _FIELD_ZERO_RADIUS
    values = np.full(pts.size, math.nan)
    if np.any(~near_zero):
        values[~near_zero] = blaschke_log_modulus(product, pts[~near_zero])
    lines = ["x,y,log_modulus"]
    for z, v in zip(pts, values):
        field_val = "nan" if math.isnan(v) else _fmt_float(v)
        lines.append(f"{_fmt_float(z.real)},{_fmt_float(z.imag)},{field_val}")
    _write_text(cfg, "\n".join(lines) + "\n")
    return EXIT_OK


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--config", help="JSON file with RunConfig fields")
    common.add_argument("--output", dest="output_path", help="write report here")
    common.add_argument("--grid-resolution", type=int, dest="grid_resolution")
    common.add_argument("--boundary-grid", type=int, dest="boundary_grid")
    common.add_argument("--psd-tol", type=float, dest="psd_tol")
    common.add_argument("--bisect-rel-tol", type=float, dest="bisect_rel_tol")
    common.add_argument("--seed", type=int, dest="seed")

    parser = _Parser(
        prog="diskinterp",
        description="Interpolation and Carleson-condition diagnostics in the disk",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common],
                       help="separation, Carleson, and per-point moduli")
    p.add_argument("input", help="point-set JSON document")
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser("decompose", parents=[common],
                       help="fitted two-part splitting")
    p.add_argument("input")
    p.add_argument("--delta", type=float,
                   help="exclusion radius (default: separation/2)")
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser("interpolate", parents=[common],
                       help="minimal-norm bounded interpolant")
    p.add_argument("input")
    p.add_argument("--targets", required=True,
                   help="comma-separated complex target values")
    p.add_argument("--boundary-csv", help="also sample |f| on the circle")
    p.set_defaults(handler=cmd_interpolate)

    p = sub.add_parser("verify-theorem", parents=[common],
                       help="run the zero/one bound chain")
    p.add_argument("input")
    p.set_defaults(handler=cmd_verify_theorem)

    p = sub.add_parser("counterexample", parents=[common],
                       help="near-collision pair family")
    p.add_argument("--pairs", type=int, required=True)
    p.add_argument("--gap", type=float, nargs="+", required=True)
    p.add_argument("--ratio", type=float, required=True)
    p.set_defaults(handler=cmd_counterexample)

    p = sub.add_parser("field", parents=[common],
                       help="CSV of log|B| over an interior grid")
    p.add_argument("input")
    p.add_argument("--which", choices=("B", "B0", "B1"), default="B")
    p.add_argument("--delta", type=float,
                   help="split at this delta instead of separation/2")
    p.set_defaults(handler=cmd_field)
    return parser


_CONFIG_FLAGS = (
    "grid_resolution", "boundary_grid", "psd_tol", "bisect_rel_tol",
    "seed", "output_path",
)


def main(argv=None) -> int:
    level = os.environ.get("DISKINTERP_LOG", "warning").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(name)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        overrides = {k: getattr(args, k, None) for k in _CONFIG_FLAGS}
        cfg = load_config(args.config, overrides)
        return args.handler(args, cfg)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalError as exc:
        print(f"numerical fault: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ValueError, TypeError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def entry() -> None:
    sys.exit(main())
