"""Command line front-end.

Subcommands: count, series, enumerate, sample, render, verify.  Exit code 0
means success, 1 means a verification found a genuine mismatch, 2 means the
invocation or its input was bad (unknown model, malformed path, size guard,
empty ensemble, and so on).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import brute, dp
from . import closedform as cf
from . import render as render_mod
from . import sampler as sampler_mod
from . import verify as verify_mod
from .model import (
    DYCK_CAT,
    LayerTag,
    ModelConfig,
    PRESETS,
    SKEW_CAT,
    normalize_final,
    parse_steps,
    preset,
    validate_path,
)
from .series import SeriesError


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _emit(content: str, args) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(content)
            if not content.endswith("\n"):
                fh.write("\n")
    else:
        print(content)


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _resolve_config(args):
    if getattr(args, "config_file", None):
        with open(args.config_file, encoding="utf-8") as fh:
            return "custom", ModelConfig.loads(fh.read())
    return args.model, preset(args.model)


def _final_label(final) -> str:
    want = normalize_final(final)
    if want is None:
        return "open"
    if want == 0:
        return "closed"
    return f"level:{want}"


def _add_model_group(p, required: bool, default: str | None = None):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument(
        "--model",
        choices=sorted(PRESETS),
        default=default,
        help="preset model name",
    )
    g.add_argument(
        "--config",
        dest="config_file",
        metavar="FILE",
        help="JSON model configuration file",
    )


def _add_final_group(p):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument(
        "--closed",
        dest="final",
        action="store_const",
        const="closed",
        help="paths ending at level 0",
    )
    g.add_argument(
        "--open",
        dest="final",
        action="store_const",
        const="all",
        help="paths ending anywhere",
    )
    g.add_argument(
        "--level",
        dest="final",
        type=_nonneg,
        metavar="K",
        help="paths ending exactly at level K",
    )


def _add_output_group(p, formats, default: str):
    p.add_argument("--format", choices=formats, default=default, help="output format")
    p.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")


# -- subcommand handlers ---------------------------------------------------


def cmd_count(args) -> int:
    label, config = _resolve_config(args)
    want = normalize_final(args.final)
    table = dp.count_table(config, args.n)
    if want is None:
        value = table.open_count(args.n)
    elif want == 0:
        value = table.closed_count(args.n)
    else:
        value = table.level_count(args.n, want)
    sel = _final_label(args.final)
    if args.format == "json":
        _emit(
            json.dumps(
                {"model": label, "n": args.n, "final": sel, "count": value}, indent=2
            ),
            args,
        )
    elif args.format == "csv":
        _emit(_csv_text(["model", "n", "final", "count"], [[label, args.n, sel, value]]), args)
    else:
        _emit(str(value), args)
    return 0


def _dp_view(name: str, order: int):
    """The dynamic-programming counterpart of a registry series, if any."""
    key = name.strip().lower()
    if key in ("f0-dyck-cat", "open-dyck-cat"):
        table = dp.count_table(DYCK_CAT, order)
        return (
            table.closed_series(order)
            if key == "f0-dyck-cat"
            else table.open_series(order)
        )
    layer_map = {"f0-skew-cat": 0, "g0-skew-cat": 1, "h0-skew-cat": 2}
    if key in ("fgh0-skew-cat", "open-skew-cat") or key in layer_map:
        table = dp.count_table(SKEW_CAT, order)
        if key == "fgh0-skew-cat":
            return table.closed_series(order)
        if key == "open-skew-cat":
            return table.open_series(order)
        layer = (LayerTag.F, LayerTag.G, LayerTag.H)[layer_map[key]]
        return table.layer_series(layer, 0, order)
    if ":" in key:
        head, _, tail = key.partition(":")
        if head in ("fj", "gj", "hj") and tail.lstrip("-").isdigit():
            j = int(tail)
            layer = {"fj": LayerTag.F, "gj": LayerTag.G, "hj": LayerTag.H}[head]
            return dp.count_table(SKEW_CAT, order).layer_series(layer, j, order)
    return None


def cmd_series(args) -> int:
    s = cf.series_by_name(args.gf, args.order)
    if args.check_dp:
        other = _dp_view(args.gf, args.order)
        if other is None:
            print(
                f"error: {args.gf} has no dynamic-programming counterpart to check",
                file=sys.stderr,
            )
            return 2
        if s != other:
            for n in range(args.order + 1):
                if s.coeff(n) != other.coeff(n):
                    print(
                        f"mismatch at z^{n}: closed form {s.coeff(n)}, table {other.coeff(n)}",
                        file=sys.stderr,
                    )
                    break
            return 1
    if args.format == "json":
        payload = {"gf": args.gf, "order": args.order, "coeffs": s.to_json()}
        if args.check_dp:
            payload["dp_match"] = True
        _emit(json.dumps(payload, indent=2), args)
    elif args.format == "csv":
        _emit(_csv_text(["n", "coeff"], [[n, str(c)] for n, c in enumerate(s.coeffs())]), args)
    else:
        _emit(",".join(str(c) for c in s.coeffs()), args)
    return 0


def cmd_enumerate(args) -> int:
    label, config = _resolve_config(args)
    paths = brute.enumerate_red(config, args.n, args.final)
    if args.format == "json":
        _emit(
            json.dumps(
                {
                    "model": label,
                    "n": args.n,
                    "final": _final_label(args.final),
                    "count": len(paths),
                    "paths": [p.to_json() for p in paths],
                },
                indent=2,
            ),
            args,
        )
    elif args.format == "csv":
        rows = [[i, str(p), p.final_level] for i, p in enumerate(paths)]
        _emit(_csv_text(["index", "steps", "final_level"], rows), args)
    else:
        _emit("\n".join(str(p) if len(p) else "(empty)" for p in paths) or "(none)", args)
    return 0


def cmd_sample(args) -> int:
    label, config = _resolve_config(args)
    spec = sampler_mod.SamplerSpec(config, args.n, args.final, args.seed)
    paths = sampler_mod.sample(spec, args.count)
    if args.format == "json":
        _emit(json.dumps([p.to_json() for p in paths], indent=2), args)
    elif args.format == "csv":
        rows = [[i, str(p), p.final_level] for i, p in enumerate(paths)]
        _emit(_csv_text(["index", "steps", "final_level"], rows), args)
    else:
        _emit("\n".join(str(p) if len(p) else "(empty)" for p in paths), args)
    return 0


def cmd_render(args) -> int:
    label, config = _resolve_config(args)
    path = validate_path(config, parse_steps(args.path))
    if args.format == "svg":
        _emit(render_mod.to_svg(path, args.geometry), args)
    elif args.format == "text":
        if args.geometry != "red":
            print("error: ASCII output exists only in the red geometry", file=sys.stderr)
            return 2
        _emit(render_mod.to_ascii(path), args)
    else:
        verts = render_mod.path_vertices(path, args.geometry)
        if args.format == "json":
            _emit(
                json.dumps(
                    {
                        "path": str(path),
                        "geometry": args.geometry,
                        "vertices": [list(v) for v in verts],
                    },
                    indent=2,
                ),
                args,
            )
        else:
            _emit(_csv_text(["x", "y"], [list(v) for v in verts]), args)
    return 0


def cmd_verify(args) -> int:
    report = verify_mod.run_suite(args.suite, args.order, args.max_n)
    if args.format == "json":
        _emit(json.dumps(report.to_json(), indent=2), args)
    elif args.format == "csv":
        rows = [
            [c.name, "pass" if c.ok else "fail", c.detail] for c in report.checks
        ]
        _emit(_csv_text(["name", "status", "detail"], rows), args)
    else:
        lines = [
            f"{'PASS' if c.ok else 'FAIL'} {c.name}: {c.detail}" for c in report.checks
        ]
        lines.append(
            f"suite={report.suite} checks={len(report.checks)} "
            f"failures={len(report.failures())} elapsed_ms={report.elapsed_ms}"
        )
        _emit("\n".join(lines), args)
    return 0 if report.ok else 1


# -- parser ----------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="catwalk",
        description="Exact enumeration of Dyck-style paths with red steps and catastrophes.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("count", help="exact path count for one length")
    _add_model_group(pc, required=True)
    pc.add_argument("--n", type=_nonneg, required=True, help="path length")
    _add_final_group(pc)
    _add_output_group(pc, ("text", "json", "csv"), "text")
    pc.set_defaults(func=cmd_count)

    ps = sub.add_parser("series", help="expand a named generating function")
    ps.add_argument(
        "--gf",
        required=True,
        metavar="NAME",
        help="registry name, e.g. f0-skew-cat, r2-dyck, fj:3 (see docs)",
    )
    ps.add_argument("--order", type=_nonneg, required=True, help="truncation order")
    ps.add_argument(
        "--check-dp",
        action="store_true",
        help="cross-check the expansion against the counting table",
    )
    _add_output_group(ps, ("text", "json", "csv"), "text")
    ps.set_defaults(func=cmd_series)

    pe = sub.add_parser("enumerate", help="list all paths of one length")
    _add_model_group(pe, required=True)
    pe.add_argument("--n", type=_nonneg, required=True, help="path length")
    _add_final_group(pe)
    _add_output_group(pe, ("text", "json", "csv"), "text")
    pe.set_defaults(func=cmd_enumerate)

    pp = sub.add_parser("sample", help="draw uniform random paths")
    _add_model_group(pp, required=True)
    pp.add_argument("--n", type=_nonneg, required=True, help="path length")
    _add_final_group(pp)
    pp.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    pp.add_argument("--count", type=_positive, default=1, help="number of draws")
    _add_output_group(pp, ("text", "json", "csv"), "text")
    pp.set_defaults(func=cmd_sample)

    pr = sub.add_parser("render", help="draw one path")
    _add_model_group(pr, required=False, default="skew-cat")
    pr.add_argument("--path", required=True, metavar="STEPS", help="compact path, e.g. UUUUDRC")
    pr.add_argument(
        "--geometry",
        choices=render_mod.GEOMETRIES,
        default="red",
        help="red: one step right per letter; sw: red steps travel south-west",
    )
    _add_output_group(pr, ("svg", "text", "json", "csv"), "svg")
    pr.set_defaults(func=cmd_render)

    pv = sub.add_parser("verify", help="run the cross-route verification suites")
    pv.add_argument(
        "--suite", choices=verify_mod.SUITES, default="all", help="which suite to run"
    )
    pv.add_argument("--order", type=_positive, default=100, help="series comparison order")
    pv.add_argument(
        "--max-n", type=_nonneg, default=12, help="brute-force enumeration bound"
    )
    _add_output_group(pv, ("text", "json", "csv"), "text")
    pv.set_defaults(func=cmd_verify)

    return p


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SeriesError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())
