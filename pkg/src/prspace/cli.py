"""Command-line interface.

Subcommands::

    prspace analyze    --input FILE [--recall-range a:b] [--beta B] [--threshold T]
    prspace aggregate  --input FILE --group-by fold|task [--grid-step 0.01] [--weighted]
    prspace downsample --input FILE --ratio 1:1,1:5 --seeds 0,1,2
    prspace bounds     (--skew PI | --pos P --neg N) [--recall R ...]
    prspace plot       --input FILE [--input FILE ...] [--skew PI ...] --output OUT.svg

Reports go to ``--output`` or stdout as JSON (default) or CSV. Floats carry six
significant digits unless ``--full-precision`` is given. Failures exit with
status 1 and print a JSON object ``{"error": <category>, "message": ...}`` on
stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .aggregate import aggregate, metrics_report
from .bounds import RecallRange, ap_min, aucpr_min_range, min_precision
from .core import ClassBalance, as_skew
from .curves import pr_curve
from .errors import DomainError, ParseError, PRSpaceError
from .io import dumps, read_predictions, report_to_json, reports_to_csv, rows_to_csv, write_text
from .plot import PlotSpec, render_svg
from .sampling import Ratio, ratio_sweep, sweep_spread


def _ratios(values) -> list[Ratio]:
    out = []
    for v in values:
        out.extend(Ratio.parse(part.strip()) for part in v.split(",") if part.strip())
    return out


def _seeds(text: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise DomainError(f"seeds must be comma-separated integers, got {text!r}") from None


def _emit(args, text: str) -> None:
    if args.output:
        write_text(args.output, text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> None:
    data = read_predictions(args.input)
    report = metrics_report(data, args.recall_range, beta=args.beta, threshold=args.threshold)
    if args.format == "csv":
        _emit(args, reports_to_csv([report], args.full_precision))
    else:
        _emit(args, report_to_json(report, args.full_precision))


def cmd_aggregate(args) -> None:
    data = read_predictions(args.input)
    agg = aggregate(
        data,
        args.group_by,
        args.recall_range,
        skew_spread_threshold=args.skew_spread_threshold,
        weighted=args.weighted,
        grid_step=args.grid_step,
        beta=args.beta,
    )
    if args.format == "csv":
        header = ["group", "pos", "neg", "skew", "aucpr", "aucnpr", "aucpr_min", "ap", "ap_min"]
        rows = [r.to_dict() for r in agg.reports]
        rows.append({"group": "mean", "aucpr": agg.mean_aucpr, "aucnpr": agg.mean_aucnpr, "ap": agg.mean_ap})
        rows.append(agg.merged.to_dict())
        _emit(args, rows_to_csv(header, rows, args.full_precision))
        return
    doc = {
        "group_by": agg.group_by,
        "weighted": agg.weighted,
        "groups": [r.to_dict() for r in agg.reports],
        "mean": {"aucpr": agg.mean_aucpr, "aucnpr": agg.mean_aucnpr, "ap": agg.mean_ap},
        "merged": agg.merged.to_dict(),
        "skew_min": agg.skew_min,
        "skew_max": agg.skew_max,
        "skew_spread": agg.skew_spread,
        "skew_warning": agg.skew_warning,
    }
    va = agg.vertical_average
    if va is not None:
        lo, hi = va.min_precision_band
        doc["vertical_average"] = {
            "grid_step": va.grid_step,
            "recall": va.recall.tolist(),
            "precision": va.precision.tolist(),
            "min_precision_lo": lo.tolist(),
            "min_precision_hi": hi.tolist(),
        }
    _emit(args, dumps(doc, args.full_precision))


def cmd_downsample(args) -> None:
    data = read_predictions(args.input)
    rows = ratio_sweep(data, _ratios(args.ratio), _seeds(args.seeds), args.recall_range)
    flat = [
        {
            "ratio": str(r.ratio),
            "seed": r.seed,
            "pos": r.downsampled.pos,
            "neg": r.downsampled.neg,
            "down_aucpr": r.down_aucpr,
            "down_aucnpr": r.down_aucnpr,
            "orig_aucpr": r.orig_aucpr,
            "orig_aucnpr": r.orig_aucnpr,
        }
        for r in rows
    ]
    if args.format == "csv":
        _emit(args, rows_to_csv(list(flat[0]), flat, args.full_precision))
        return
    doc = {"rows": flat}
    if len(rows) > 1:
        doc["spread"] = sweep_spread(rows)
    _emit(args, dumps(doc, args.full_precision))


def cmd_bounds(args) -> None:
    if args.skew is not None:
        if args.pos is not None or args.neg is not None:
            raise DomainError("give either --skew or --pos/--neg, not both")
        skew, counts = as_skew(args.skew), None
    elif args.pos is not None and args.neg is not None:
        counts = ClassBalance(args.pos, args.neg)
        skew = as_skew(counts)
    else:
        raise DomainError("bounds needs --skew or both --pos and --neg")
    rr = args.recall_range or RecallRange()
    doc = {
        "skew": skew,
        "range": [rr.lo, rr.hi],
        "aucpr_min": aucpr_min_range(skew, rr),
        "aucpr_max": rr.width,
    }
    if counts is not None:
        doc["pos"], doc["neg"] = counts.pos, counts.neg
        doc["ap_min"] = ap_min(counts.pos, counts.neg)
    if args.recall:
        doc["min_precision"] = [{"recall": r, "precision": min_precision(r, skew)} for r in args.recall]
    if args.format == "csv":
        rows = [{"key": k, "value": v} for k, v in doc.items() if k not in ("min_precision",)]
        rows += [{"key": f"min_precision@{m['recall']:g}", "value": m["precision"]} for m in doc.get("min_precision", [])]
        _emit(args, rows_to_csv(["key", "value"], rows, args.full_precision))
    else:
        _emit(args, dumps(doc, args.full_precision))


def cmd_plot(args) -> None:
    curves = []
    for path in args.input or []:
        curves.append((Path(path).stem, pr_curve(read_predictions(path))))
    if not curves and not args.skew:
        raise DomainError("plot needs at least one --input or --skew")
    spec = PlotSpec(
        curves=curves,
        skews=args.skew,
        recall_range=args.recall_range or RecallRange(),
        width=args.width,
        height=args.height,
        title=args.title,
    )
    write_text(args.output, render_svg(spec))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="prspace", description="Precision-recall analysis with achievability bounds.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_format=True, output_required=False):
        p.add_argument("--recall-range", default=None, metavar="A:B", help="recall interval (default 0:1)")
        if with_format:
            p.add_argument("--format", choices=("json", "csv"), default="json")
            p.add_argument("--full-precision", action="store_true", help="print floats without rounding")
        p.add_argument("--output", "-o", required=output_required, default=None, help="output path")

    p = sub.add_parser("analyze", help="score one prediction file")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--threshold", type=float, default=None, help="operating point for F-beta (default: best cutpoint)")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("aggregate", help="per-fold or per-task table with means")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--group-by", choices=("fold", "task"), default="fold")
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--grid-step", type=float, default=0.01, help="recall grid for vertically averaged curves")
    p.add_argument("--weighted", action="store_true", help="weight means by group size")
    p.add_argument("--skew-spread-threshold", type=float, default=0.05)
    common(p)
    p.set_defaults(func=cmd_aggregate)

    p = sub.add_parser("downsample", help="ratio sweep over downsampled negatives")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--ratio", action="append", required=True, metavar="P:N", help="target ratio(s), repeat or comma-separate")
    p.add_argument("--seeds", default="0", help="comma-separated integer seeds")
    common(p)
    p.set_defaults(func=cmd_downsample)

    p = sub.add_parser("bounds", help="closed-form bounds for a skew or class counts")
    p.add_argument("--skew", type=float, default=None)
    p.add_argument("--pos", type=int, default=None)
    p.add_argument("--neg", type=int, default=None)
    p.add_argument("--recall", type=float, action="append", default=None, help="report minimum precision at this recall")
    common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("plot", help="SVG PR plot with the minimum PR curve")
    p.add_argument("--input", "-i", action="append", default=None)
    p.add_argument("--skew", type=float, action="append", default=None, help="skew(s) for the minimum-curve overlay")
    p.add_argument("--width", type=int, default=800)
    p.add_argument("--height", type=int, default=600)
    p.add_argument("--title", default=None)
    common(p, with_format=False, output_required=True)
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "recall_range", None) is not None:
            args.recall_range = RecallRange.parse(args.recall_range)
        args.func(args)
    except PRSpaceError as exc:
        err = {"error": exc.category, "message": str(exc)}
        if isinstance(exc, ParseError) and exc.line is not None:
            err["line"] = exc.line
        sys.stderr.write(json.dumps(err) + "\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
