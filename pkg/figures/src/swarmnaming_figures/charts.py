"""The six figure families regenerated from the simulator's CSV summaries.

Every renderer takes an input directory, reads only the CSVs it declares, and
returns a matplotlib Figure whose plotted values are introspectable (bar
containers and line data carry the numbers shown).
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .data import load_table

END_CLASSES = ("OO", "OX", "XO", "XX")
# Red family: the final word matched the selected resource; green: it did not.
CLASS_COLORS = {"OO": "#b2182b", "OX": "#ef8a62", "XO": "#1b7837", "XX": "#a6dba0"}
SPREAD_BINS = ("0-10", "10-20", "20-30", "30-40", "40-50")
SCOPES = ("whole", "within", "between")


@dataclass(frozen=True)
class FigureSpec:
    figure_id: str
    inputs: tuple[str, ...]
    description: str
    options: dict = field(default_factory=dict)


def _empty_figure(note: str):
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.set_axis_off()
    ax.annotate(
        f"no data: {note}", (0.5, 0.5), ha="center", va="center", fontsize=12
    )
    return fig


def _cells(rows):
    """Group rows by (variant, p_sigma), both read as plain strings."""
    cells = defaultdict(list)
    for row in rows:
        cells[(row["variant"], row["p_sigma"])].append(row)
    return dict(sorted(cells.items()))


def render_end_state_hist(in_dir) -> plt.Figure:
    rows = [r for r in load_table(in_dir, "end_states.csv") if r["end_state"] in END_CLASSES]
    if not rows:
        return _empty_figure("end_states.csv has no classified runs")
    cells = _cells(rows)
    fig, axes = plt.subplots(
        1, len(cells), figsize=(3.2 * len(cells), 3.4), squeeze=False, sharey=True
    )
    for ax, ((variant, sigma), cell_rows) in zip(axes[0], cells.items()):
        weights = {c: 0.0 for c in END_CLASSES}
        for row in cell_rows:
            weights[row["end_state"]] += float(row["weight"])
        total = sum(weights.values()) or 1.0
        freqs = [weights[c] / total for c in END_CLASSES]
        ax.bar(END_CLASSES, freqs, color=[CLASS_COLORS[c] for c in END_CLASSES])
        ax.set_title(f"{variant}, p_sigma={sigma}", fontsize=9)
        ax.set_ylim(0, 1)
    axes[0][0].set_ylabel("frequency")
    fig.suptitle("Vocabulary end states")
    fig.tight_layout()
    return fig


def render_spread_stack(in_dir) -> plt.Figure:
    rows = [r for r in load_table(in_dir, "end_states.csv") if r["end_state"] in END_CLASSES]
    rows = [r for r in rows if r["spread_bin"]]
    if not rows:
        return _empty_figure("end_states.csv has no classified runs with a spread bin")
    cells = _cells(rows)
    fig, axes = plt.subplots(
        1, len(cells), figsize=(3.6 * len(cells), 3.6), squeeze=False, sharey=True
    )
    x = np.arange(len(SPREAD_BINS))
    for ax, ((variant, sigma), cell_rows) in zip(axes[0], cells.items()):
        stacks = {c: np.zeros(len(SPREAD_BINS)) for c in END_CLASSES}
        for row in cell_rows:
            stacks[row["end_state"]][SPREAD_BINS.index(row["spread_bin"])] += float(
                row["weight"]
            )
        bottom = np.zeros(len(SPREAD_BINS))
        for cls in END_CLASSES:
            ax.bar(x, stacks[cls], bottom=bottom, color=CLASS_COLORS[cls], label=cls)
            bottom += stacks[cls]
        for xi, total in zip(x, bottom):
            if total:
                ax.annotate(f"{total:g}", (xi, total), ha="center", va="bottom", fontsize=7)
        ax.set_xticks(x, SPREAD_BINS, fontsize=7)
        ax.set_title(f"{variant}, p_sigma={sigma}", fontsize=9)
        ax.set_xlabel("% on non-selected resource")
    axes[0][0].set_ylabel("runs (weighted)")
    axes[0][-1].legend(fontsize=7)
    fig.suptitle("End states by swarm spread at convergence")
    fig.tight_layout()
    return fig


def render_origin_curves(in_dir) -> plt.Figure:
    rows = load_table(in_dir, "origins.csv")
    if not rows:
        return _empty_figure("origins.csv is empty")
    fig, ax = plt.subplots(figsize=(6.4, 4))
    series = defaultdict(list)
    for row in rows:
        key = (row["committed"] == "true", row["trigger"])
        series[key].append((float(row["t_bin"]), float(row["rate"])))
    for (committed, trigger), points in sorted(series.items()):
        points.sort()
        color = "tab:green" if trigger == "self" else "tab:red"
        alpha = 0.45 if committed else 1.0
        label = f"{'committed' if committed else 'uncommitted'}, {trigger}"
        ax.plot(*zip(*points), color=color, alpha=alpha, label=label)
    ax.set_xlabel("time [s]")
    ax.set_ylabel("first words per second per run")
    ax.legend(fontsize=8)
    fig.suptitle("Origin of each robot's first word")
    fig.tight_layout()
    return fig


def render_neighborhood_heatmap(in_dir, cross_section_n: int = 9) -> plt.Figure:
    rows = load_table(in_dir, "neighborhood.csv")
    if not rows:
        return _empty_figure("neighborhood.csv is empty")
    data = [
        (int(r["n_small"]), r["scope"], int(r["k"]), float(r["probability"])) for r in rows
    ]
    # n_small = 0 rows come from uncommitted reference swarms; the heatmaps
    # show the locked sub-populations (n_small >= 1).
    locked = [d for d in data if d[0] >= 1]
    if not locked:
        return _empty_figure("neighborhood.csv has no locked sub-population rows")
    ns = sorted({d[0] for d in locked})
    ks = range(max(d[2] for d in data) + 1)
    fig, axes = plt.subplots(2, 2, figsize=(9, 7))
    for ax, scope in zip(axes.flat, SCOPES):
        grid = np.zeros((len(ks), len(ns)))
        for n, s, k, p in locked:
            if s == scope:
                grid[k, ns.index(n)] = p
        im = ax.imshow(
            grid,
            origin="lower",
            aspect="auto",
            extent=(ns[0] - 0.5, ns[-1] + 0.5, -0.5, max(ks) + 0.5),
            cmap="viridis",
        )
        fig.colorbar(im, ax=ax, shrink=0.8)
        ax.set_title(scope, fontsize=9)
        ax.set_xlabel("smallest sub-population size")
        ax.set_ylabel("|N|")
    ax = axes[1, 1]
    target = min(ns, key=lambda n: abs(n - cross_section_n))
    styles = {"whole": "tab:blue", "within": "tab:red", "between": "tab:green"}
    for scope in SCOPES:
        pts = sorted((k, p) for n, s, k, p in locked if s == scope and n == target)
        if pts:
            ax.plot(*zip(*pts), color=styles[scope], label=f"{scope} (n={target})")
    reference = sorted((k, p) for n, s, k, p in data if n == 0 and s == "whole")
    if reference:
        ax.plot(*zip(*reference), "b:", label="random walk")
    ax.set_xlabel("|N|")
    ax.set_ylabel("probability")
    ax.legend(fontsize=8)
    fig.suptitle("Neighborhood size distributions")
    fig.tight_layout()
    return fig


def render_interaction_series(in_dir) -> plt.Figure:
    rows = load_table(in_dir, "interactions.csv")
    if not rows:
        return _empty_figure("interactions.csv is empty")
    rows.sort(key=lambda r: float(r["t_bin"]))
    t = [float(r["t_bin"]) for r in rows]
    fig, ax = plt.subplots(figsize=(6.4, 4))
    ax.plot(t, [float(r["within"]) for r in rows], color="tab:cyan", label="within")
    ax.plot(t, [float(r["between"]) for r in rows], color="tab:purple", label="between")
    ax2 = ax.twinx()
    ax2.plot(t, [float(r["exchanges"]) for r in rows], color="tab:red", label="exchanges")
    ax.set_xlabel("time [s]")
    ax.set_ylabel("utterance deliveries per run")
    ax2.set_ylabel("robot exchanges per run")
    lines = ax.get_lines() + ax2.get_lines()
    ax.legend(lines, [ln.get_label() for ln in lines], fontsize=8)
    fig.suptitle("Communication and robot exchange load")
    fig.tight_layout()
    return fig


def render_commitment_scatter(in_dir) -> plt.Figure:
    rows = load_table(in_dir, "populations.csv")
    if not rows:
        return _empty_figure("populations.csv is empty")
    by_sigma = defaultdict(lambda: defaultdict(list))
    for r in rows:
        by_sigma[r["p_sigma"]][r["run_id"]].append(
            (float(r["t"]), int(r["n_u"]), int(r["n_a"]), int(r["n_b"]))
        )
    sigmas = sorted(by_sigma)
    t_max = max(float(r["t"]) for r in rows)
    stages = [0.25 * t_max, 0.5 * t_max, t_max]
    fig, axes = plt.subplots(
        len(sigmas), len(stages), figsize=(3.1 * len(stages), 3.1 * len(sigmas)),
        squeeze=False,
    )
    for row_i, sigma in enumerate(sigmas):
        for col_i, t_stage in enumerate(stages):
            ax = axes[row_i][col_i]
            pct_a, pct_b = [], []
            for series in by_sigma[sigma].values():
                series.sort()
                usable = [s for s in series if s[0] <= t_stage] or series[:1]
                _, n_u, n_a, n_b = usable[-1]
                total = n_u + n_a + n_b
                pct_a.append(100.0 * n_a / total)
                pct_b.append(100.0 * n_b / total)
            ax.scatter(pct_a, pct_b, s=12, alpha=0.6)
            ax.set_xlim(-3, 103)
            ax.set_ylim(-3, 103)
            ax.set_title(f"p_sigma={sigma}, t={t_stage:g}s", fontsize=8)
            inset = ax.inset_axes([0.55, 0.55, 0.42, 0.38])
            inset.hist(pct_a, bins=np.linspace(0, 100, 11), color="gray")
            inset.set_xticks([0, 50, 100])
            inset.tick_params(labelsize=5)
            if row_i == len(sigmas) - 1:
                ax.set_xlabel("% committed to A")
            if col_i == 0:
                ax.set_ylabel("% committed to B")
    fig.suptitle("Final distribution of commitments")
    fig.tight_layout()
    return fig


FIGURES = {
    "commitment_scatter": FigureSpec(
        "commitment_scatter",
        ("populations.csv",),
        "scatter of committed percentages with histogram insets",
    ),
    "end_state_hist": FigureSpec(
        "end_state_hist", ("end_states.csv",), "vocabulary end-state histograms"
    ),
    "spread_stack": FigureSpec(
        "spread_stack", ("end_states.csv",), "end states split by spread bin"
    ),
    "origin_curves": FigureSpec(
        "origin_curves", ("origins.csv",), "first-word origin rates over time"
    ),
    "neighborhood_heatmap": FigureSpec(
        "neighborhood_heatmap", ("neighborhood.csv",), "neighborhood size heatmaps"
    ),
    "interaction_series": FigureSpec(
        "interaction_series", ("interactions.csv",), "communication and exchange load"
    ),
}

_RENDERERS = {
    "commitment_scatter": render_commitment_scatter,
    "end_state_hist": render_end_state_hist,
    "spread_stack": render_spread_stack,
    "origin_curves": render_origin_curves,
    "neighborhood_heatmap": render_neighborhood_heatmap,
    "interaction_series": render_interaction_series,
}


def render(figure_id: str, in_dir: str | Path, out_dir: str | Path) -> Path:
    """Render one figure family to ``<out_dir>/<figure_id>.png``."""
    fig = _RENDERERS[figure_id](in_dir)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    path = out / f"{figure_id}.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def build_figure(figure_id: str, in_dir: str | Path) -> plt.Figure:
    """Build a figure without saving it (introspection and tests)."""
    return _RENDERERS[figure_id](in_dir)
