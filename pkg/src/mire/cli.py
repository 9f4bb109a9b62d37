"""Command-line interface.

Subcommands: ``correct`` (midway destriping, fixed or automatic sigma),
``tv-correct`` (column-offset baseline), ``simulate`` (seeded non-uniformity
corruption), ``evaluate`` (RMSE between two images), ``sweep`` (TV norm of the
correction across a sigma grid, as CSV). Report and CSV paths get a rendered
PNG figure alongside them.
"""

import argparse
import sys
import time
from pathlib import Path

from mire import figures
from mire.correction import DEFAULT_SIGMA_GRID, auto_sigma, mire_correct
from mire.image_io import ImageError, read_image, write_image
from mire.metrics import rmse, tv_norm
from mire.report import MetricsReport
from mire.simulate import NuParams, simulate_nu
from mire.tv_baseline import tv_correct


def _parse_grid(text):
    try:
        grid = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad sigma list {text!r}")
    if not grid:
        raise argparse.ArgumentTypeError("sigma list is empty")
    if any(s < 0 for s in grid):
        raise argparse.ArgumentTypeError("sigmas must be >= 0")
    if sorted(grid) != grid:
        raise argparse.ArgumentTypeError("sigma list must be ascending")
    return grid


def _parse_seed(text):
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mire",
        description="Single-frame column/line fixed-pattern-noise correction "
                    "by sliding midway histogram specification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("correct", help="midway destriping of one frame")
    p.add_argument("input", help="input image (PGM or PNG)")
    p.add_argument("output", help="corrected image, written at matching bit depth")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--sigma", type=float,
                      help="fixed Gaussian std-dev, in columns")
    mode.add_argument("--auto", action="store_true",
                      help="select sigma by TV minimization")
    p.add_argument("--grid", type=_parse_grid, default=list(DEFAULT_SIGMA_GRID),
                   help="comma-separated ascending sigma grid for --auto")
    p.add_argument("--orientation", choices=("columns", "lines"),
                   default="columns", help="stripe direction")
    p.add_argument("--truth", help="clean reference image for RMSE reporting")
    p.add_argument("--report", help="write a JSON metrics report (+ PNG figure)")
    p.set_defaults(func=cmd_correct)

    p = sub.add_parser("tv-correct", help="per-column additive TV baseline")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--truth", help="clean reference image for RMSE reporting")
    p.add_argument("--report", help="write a JSON metrics report (+ PNG figure)")
    p.set_defaults(func=cmd_tv_correct)

    p = sub.add_parser("simulate", help="corrupt a clean image with column NU")
    p.add_argument("input", help="clean image")
    p.add_argument("output", help="corrupted image")
    p.add_argument("--gain-std", type=float, default=0.05)
    p.add_argument("--offset-std", type=float, default=0.05)
    p.add_argument("--noise-std", type=float, default=0.01)
    p.add_argument("--seed", type=_parse_seed, default=0)
    p.add_argument("--truth", help="write drawn gains/offsets as JSON")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("evaluate", help="print RMSE between two images")
    p.add_argument("truth")
    p.add_argument("candidate")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("sweep", help="TV norm of the correction per sigma")
    p.add_argument("input")
    p.add_argument("--grid", type=_parse_grid, default=list(DEFAULT_SIGMA_GRID),
                   help="comma-separated ascending sigma list")
    p.add_argument("--csv", required=True,
                   help="output CSV of sigma,tv rows (+ PNG figure)")
    p.add_argument("--save-images", metavar="DIR",
                   help="also save the corrected image for every sigma")
    p.set_defaults(func=cmd_sweep)

    return parser


def _write_report(args, report, before, after):
    if args.report:
        report.write(args.report)
        figures.render_correction_figure(
            before, after, report, figures.figure_path_for(args.report))


def _maybe_rmse(args, corrected):
    if not args.truth:
        return None
    truth, _ = read_image(args.truth)
    return rmse(truth, corrected)


def cmd_correct(args):
    img, bit_depth = read_image(args.input)

    start = time.perf_counter()
    if args.auto:
        result = auto_sigma(img, grid=args.grid, orientation=args.orientation)
        corrected, sigma_used, trace = result.corrected, result.best_sigma, result.trace
    else:
        corrected = mire_correct(img, args.sigma, orientation=args.orientation)
        sigma_used, trace = args.sigma, None
    runtime_ms = (time.perf_counter() - start) * 1000.0

    write_image(args.output, corrected, bit_depth)
    report = MetricsReport(
        input_path=args.input, method="mire",
        tv_before=tv_norm(img), tv_after=tv_norm(corrected),
        runtime_ms=runtime_ms, sigma_used=sigma_used,
        rmse_vs_truth=_maybe_rmse(args, corrected), trace=trace)
    _write_report(args, report, img, corrected)
    if args.auto:
        print(f"sigma: {sigma_used:.10g}")
    print(f"tv: {report.tv_before:.10g} -> {report.tv_after:.10g}")
    return 0


def cmd_tv_correct(args):
    img, bit_depth = read_image(args.input)

    start = time.perf_counter()
    corrected = tv_correct(img)
    runtime_ms = (time.perf_counter() - start) * 1000.0

    write_image(args.output, corrected, bit_depth)
    report = MetricsReport(
        input_path=args.input, method="tv",
        tv_before=tv_norm(img), tv_after=tv_norm(corrected),
        runtime_ms=runtime_ms,
        rmse_vs_truth=_maybe_rmse(args, corrected))
    _write_report(args, report, img, corrected)
    print(f"tv: {report.tv_before:.10g} -> {report.tv_after:.10g}")
    return 0


def cmd_simulate(args):
    import json

    clean, bit_depth = read_image(args.input)
    params = NuParams(gain_std=args.gain_std, offset_std=args.offset_std,
                      noise_std=args.noise_std, seed=args.seed)
    corrupted, truth = simulate_nu(clean, params)
    write_image(args.output, corrupted, bit_depth)
    if args.truth:
        record = {"seed": params.seed, "gain_std": params.gain_std,
                  "offset_std": params.offset_std,
                  "noise_std": params.noise_std, **truth.to_dict()}
        Path(args.truth).write_text(json.dumps(record, indent=2) + "\n")
    print(f"simulated: seed={params.seed} "
          f"rmse_vs_clean={rmse(clean, corrupted):.10g}")
    return 0


def cmd_evaluate(args):
    truth, _ = read_image(args.truth)
    candidate, _ = read_image(args.candidate)
    print(f"rmse: {rmse(truth, candidate):.10g}")
    return 0


def cmd_sweep(args):
    img, bit_depth = read_image(args.input)
    image_dir = None
    if args.save_images:
        image_dir = Path(args.save_images)
        image_dir.mkdir(parents=True, exist_ok=True)

    rows = []
    lines = ["sigma,tv_norm,image" if image_dir else "sigma,tv_norm"]
    for sigma in args.grid:
        corrected = mire_correct(img, sigma)
        tv = tv_norm(corrected)
        rows.append((sigma, tv))
        if image_dir:
            out = image_dir / f"{Path(args.input).stem}_sigma{sigma:g}.pgm"
            write_image(out, corrected, bit_depth)
            lines.append(f"{sigma:.10g},{tv:.10g},{out}")
        else:
            lines.append(f"{sigma:.10g},{tv:.10g}")
    Path(args.csv).write_text("\n".join(lines) + "\n")
    figures.render_sweep_figure(rows, figures.figure_path_for(args.csv))

    best = min(rows, key=lambda st: (st[1], st[0]))
    print(f"minimum: sigma={best[0]:.10g} tv={best[1]:.10g}")
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ImageError, ValueError, OSError) as exc:
        print(f"mire: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
