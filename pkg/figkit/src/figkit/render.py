"""Panel renderers for laboratory CSVs.

Figures are regenerable artifacts: all numbers live in the CSVs, rendering
is deterministic (fixed fonts and sizes, pinned SVG hash salt, no embedded
timestamps), and identical inputs yield byte-identical image files.

Panel kinds:

    drive-trace   log-log trace distance vs time with a T^slope guide line
    xi-overlay    trace distance plus the xi series, orange marks at xi > -1
    survival      first-return survival (slope -1/2 guide) and binned
                  density (slope -3/2 guide) from a histogram CSV
    step-length   the step-length function log(4 sin^2 theta)
    classify      one trace per rule, colored by assigned class
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .csvread import column, read_lab_csv

PANEL_KINDS = ("drive-trace", "xi-overlay", "survival", "step-length", "classify")

matplotlib.rcParams.update({
    "svg.hashsalt": "figkit",
    "font.family": "DejaVu Sans",
    "font.size": 9,
    "figure.dpi": 100,
    "savefig.dpi": 100,
})

CLASS_COLORS = {
    "regular-chse": "tab:green",
    "cs-chse": "tab:orange",
    "asymptotically-floquet": "dimgray",
    "ambiguous": "tab:blue",
}


class FigureSpecError(Exception):
    pass


@dataclass
class PanelSpec:
    kind: str
    csv_paths: list = field(default_factory=list)
    guide_exponent: float | None = None   # slope of the dashed/dotted guide
    title: str = ""
    labels: list = field(default_factory=list)

    def __post_init__(self):
        if self.kind not in PANEL_KINDS:
            raise FigureSpecError(f"unknown panel kind {self.kind!r}")
        if self.guide_exponent is not None and not math.isfinite(self.guide_exponent):
            raise FigureSpecError("guide exponent must be finite")


@dataclass
class FigureSpec:
    panels: list
    output: str
    width: float = 3.4   # inches per panel column
    height: float = 2.6

    @classmethod
    def from_dict(cls, d: dict) -> "FigureSpec":
        panels = [PanelSpec(**p) for p in d["panels"]]
        return cls(panels=panels, output=d["output"],
                   width=d.get("width", 3.4), height=d.get("height", 2.6))


def _guide(ax, xs, ys, exponent, style, label):
    """Reference power law anchored at the first finite data point."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    good = (xs > 0) & (ys > 0)
    if not good.any():
        return
    x0, y0 = xs[good][0], ys[good][0]
    gx = np.geomspace(xs[good].min(), xs[good].max(), 64)
    ax.plot(gx, y0 * (gx / x0) ** exponent, style, color="black", lw=0.9, label=label)


def _render_drive_trace(ax, panel: PanelSpec):
    exponent = -0.5 if panel.guide_exponent is None else panel.guide_exponent
    first = None
    for i, path in enumerate(panel.csv_paths):
        config, header, rows = read_lab_csv(path)
        ts = column(header, rows, "S_n")
        deltas = column(header, rows, "delta_k")
        label = panel.labels[i] if i < len(panel.labels) else (
            f"d={config['d']}, k={config['k']}" if config else path)
        ax.loglog(ts, deltas, lw=1.0, label=label)
        if first is None:
            first = (ts, deltas)
    _guide(ax, *first, exponent, "--", f"$T^{{{exponent:g}}}$")
    ax.set_xlabel("$T$")
    ax.set_ylabel("trace distance")
    ax.legend(frameon=False, fontsize=7)


def _render_xi_overlay(ax, panel: PanelSpec):
    config, header, rows = read_lab_csv(panel.csv_paths[0])
    ns = column(header, rows, "n")
    deltas = column(header, rows, "delta_k")
    xis = column(header, rows, "xi_n")
    ax.semilogy(ns, deltas, color="tab:green", lw=1.1, label="trace distance")
    for n, x in zip(ns, xis):
        if x is not None and x > -1:
            ax.axvline(n, color="orange", lw=0.5, alpha=0.6, zorder=0)
    ax2 = ax.twinx()
    finite = [(n, x) for n, x in zip(ns, xis) if x is not None and math.isfinite(x)]
    ax2.plot(*zip(*finite), color="gray", lw=0.6, label=r"$\xi_n$")
    ax2.set_ylabel(r"$\xi_n$", color="gray")
    ax.set_xlabel("level $n$  ($T = 2^n$)")
    ax.set_ylabel("trace distance")
    ax.legend(frameon=False, fontsize=7, loc="lower left")


def _render_survival(ax, panel: PanelSpec):
    config, header, rows = read_lab_csv(panel.csv_paths[0])
    lo = column(header, rows, "bin_lo")
    hi = column(header, rows, "bin_hi")
    counts = column(header, rows, "count")
    surv = column(header, rows, "survival")
    centers = [math.sqrt(a * b) for a, b in zip(lo, hi)]
    total = sum(counts) or 1.0
    density = [c / (b - a) / total for c, a, b in zip(counts, lo, hi)]
    dens_pts = [(x, y) for x, y in zip(centers, density) if y > 0]
    ax.loglog(*zip(*dens_pts), "o", ms=2.5, color="tab:blue", label="first-return density")
    _guide(ax, [p[0] for p in dens_pts], [p[1] for p in dens_pts],
           -1.5 if panel.guide_exponent is None else panel.guide_exponent,
           ":", "$n^{-3/2}$")
    surv_pts = [(x, s) for x, s in zip(lo, surv) if s and s > 0]
    ax.loglog(*zip(*surv_pts), lw=1.0, color="tab:red", label="survival")
    _guide(ax, [p[0] for p in surv_pts], [p[1] for p in surv_pts], -0.5, "--", "$n^{-1/2}$")
    ax.set_xlabel("first-return step $n$")
    ax.set_ylabel("probability")
    ax.legend(frameon=False, fontsize=7)


def _render_step_length(ax, panel: PanelSpec):
    theta = np.linspace(1e-3, 2 * math.pi - 1e-3, 2000)
    ax.plot(theta, np.log(4 * np.sin(theta) ** 2), lw=1.0)
    ax.axhline(math.log(4), color="black", ls="--", lw=0.8)
    ax.set_ylim(-8, 2.2)
    ax.set_xlabel(r"$\theta$")
    ax.set_ylabel(r"$\log(4\sin^2\theta)$")


def _render_classify(ax, panel: PanelSpec):
    # first CSV: classification table; remaining: per-rule traces
    config, header, rows = read_lab_csv(panel.csv_paths[0])
    classes = {row[header.index("name")]: row[header.index("class")] for row in rows}
    for path in panel.csv_paths[1:]:
        cfg, h, r = read_lab_csv(path)
        name = cfg["rule"] if cfg else path
        klass = classes.get(name, "ambiguous")
        ax.loglog(column(h, r, "S_n"), column(h, r, "delta_k"),
                  color=CLASS_COLORS.get(klass, "tab:blue"), lw=1.0,
                  label=f"{name} [{klass}]")
    ax.set_xlabel("$T$")
    ax.set_ylabel("trace distance")
    ax.legend(frameon=False, fontsize=6)


_RENDERERS = {
    "drive-trace": _render_drive_trace,
    "xi-overlay": _render_xi_overlay,
    "survival": _render_survival,
    "step-length": _render_step_length,
    "classify": _render_classify,
}


def render(spec: FigureSpec) -> str:
    """Render every panel of the spec into one image file; returns the path.

    Raises on missing columns or empty CSVs rather than producing a blank
    image.
    """
    if not spec.panels:
        raise FigureSpecError("figure has no panels")
    for panel in spec.panels:
        if panel.kind != "step-length" and not panel.csv_paths:
            raise FigureSpecError(f"panel {panel.kind!r} lists no CSVs")
    n = len(spec.panels)
    fig, axes = plt.subplots(1, n, figsize=(spec.width * n, spec.height))
    if n == 1:
        axes = [axes]
    try:
        for ax, panel in zip(axes, spec.panels):
            _RENDERERS[panel.kind](ax, panel)
            if panel.title:
                ax.set_title(panel.title, fontsize=9)
        fig.tight_layout()
        metadata = {"Date": None} if spec.output.endswith(".svg") else {}
        fig.savefig(spec.output, metadata=metadata)
    finally:
        plt.close(fig)
    return spec.output
