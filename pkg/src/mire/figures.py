"""Figure rendering for CLI reports.

Every report/CSV the CLI writes gets a PNG figure next to it: before/after
panels with the column-mean profile for corrections, the TV-vs-sigma curve
for sweeps. matplotlib is imported lazily so plain library use never pays
for it.
"""

import numpy as np


def _pyplot():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def figure_path_for(out_path):
    """PNG sibling of a report/CSV path (same stem)."""
    from pathlib import Path
    return Path(out_path).with_suffix(".png")


def render_correction_figure(before, after, report, path):
    """Input/output panels, column-mean profiles, and the sigma trace if any."""
    plt = _pyplot()
    has_trace = bool(report.trace)
    ncols = 3 if has_trace else 2
    fig, axes = plt.subplots(2, ncols, figsize=(4.2 * ncols, 7.2))

    vmin = min(before.min(), after.min())
    vmax = max(before.max(), after.max())
    axes[0, 0].imshow(before, cmap="gray", vmin=vmin, vmax=vmax,
                      interpolation="nearest")
    axes[0, 0].set_title(f"input (TV {report.tv_before:.4g})")
    axes[0, 1].imshow(after, cmap="gray", vmin=vmin, vmax=vmax,
                      interpolation="nearest")
    axes[0, 1].set_title(f"{report.method} corrected (TV {report.tv_after:.4g})")
    for ax in axes[0, :2]:
        ax.set_axis_off()

    prof = axes[1, 0]
    prof.plot(before.mean(axis=0), lw=0.9, label="input")
    prof.plot(after.mean(axis=0), lw=0.9, label="corrected")
    prof.set_xlabel("column")
    prof.set_ylabel("mean intensity")
    prof.set_title("column-mean profile")
    prof.legend(fontsize=8)

    diff = axes[1, 1]
    d = after - before
    span = max(abs(d).max(), 1e-12)
    diff.imshow(d, cmap="coolwarm", vmin=-span, vmax=span,
                interpolation="nearest")
    diff.set_title("correction (output - input)")
    diff.set_axis_off()

    if has_trace:
        _plot_trace(axes[0, 2], report.trace, report.sigma_used)
        axes[1, 2].set_axis_off()

    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)


def render_sweep_figure(rows, path):
    """TV-vs-sigma curve for a sweep; rows are (sigma, tv) pairs."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(5.2, 3.6))
    rows = sorted(rows)
    best = min(rows, key=lambda st: (st[1], st[0]))
    _plot_trace(ax, rows, best[0])
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)


def _plot_trace(ax, trace, best_sigma):
    pts = np.array(sorted(trace))
    ax.plot(pts[:, 0], pts[:, 1], "o-", ms=3, lw=0.9)
    if best_sigma is not None:
        tv_best = dict((s, t) for s, t in trace)[best_sigma]
        ax.plot([best_sigma], [tv_best], "r*", ms=10,
                label=f"min at sigma={best_sigma:.3g}")
        ax.legend(fontsize=8)
    ax.set_xlabel("sigma (columns)")
    ax.set_ylabel("TV norm of corrected image")
    ax.set_title("smoothing-scale trace")
