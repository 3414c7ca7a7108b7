"""Figures written next to the JSON reports."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .distance import sphere_packing_volume  # noqa: E402

ROWS = ("cond1", "cond2", "cond3", "optimal")


def _style(ax, title):
    ax.set_title(title, fontsize=11)
    for side in ("top", "right"):
        ax.spines[side].set_visible(False)


def plot_condition_strip(summary, path):
    """One column per audited v: which lemma conditions hold, and the true verdict."""
    rows = summary.rows
    if not rows:
        return None
    vs = [r["v"] for r in rows]
    grid = np.array([[bool(r[k]) for r in rows] for k in ROWS], dtype=float)
    width = min(16, 3 + 0.04 * len(vs))
    fig, ax = plt.subplots(figsize=(width, 2.6))
    ax.imshow(grid, aspect="auto", cmap="Greens", vmin=0, vmax=1, interpolation="nearest")
    ax.set_yticks(range(len(ROWS)), ROWS)
    ticks = np.linspace(0, len(vs) - 1, min(12, len(vs))).astype(int)
    ax.set_xticks(ticks, [str(vs[t]) for t in ticks])
    ax.set_xlabel("v")
    _style(ax, f"C_{summary.p}(1,v), n={summary.n}: conditions vs verdict")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return Path(path)


def plot_sphere_packing(p, ms, path):
    """V_p(n, 2) against p^(2m) on a log scale; above the line, d >= 5 is impossible."""
    ms = list(ms)
    ns = [2 * (p**m - 1) // (p - 1) for m in ms]
    vol = [sphere_packing_volume(n, 2, p) for n in ns]
    cap = [p ** (2 * m) for m in ms]
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.semilogy(ms, [float(x) for x in vol], "o-", label="V_p(n, 2)")
    ax.semilogy(ms, [float(x) for x in cap], "s--", label="p^(2m)")
    ax.set_xlabel("m")
    ax.legend(frameon=False)
    _style(ax, f"sphere-packing check, p={p}")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return Path(path)


def render_sweep_figures(summaries, outdir):
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for s in summaries:
        f = plot_condition_strip(s, outdir / f"conditions_p{s.p}_m{s.m}.png")
        if f:
            written.append(f)
    for p in sorted({s.p for s in summaries}):
        written.append(plot_sphere_packing(p, range(2, 8), outdir / f"sphere_packing_p{p}.png"))
    return written
