import csv
from collections import defaultdict

import pytest

from swarmnaming_figures.charts import END_CLASSES, FIGURES, build_figure, render
from swarmnaming_figures.data import SchemaError, load_table


def test_all_six_families_render(csv_dir, tmp_path):
    for figure_id in FIGURES:
        path = render(figure_id, csv_dir, tmp_path)
        assert path.exists() and path.stat().st_size > 0, figure_id


def test_end_state_hist_matches_csv_counts(csv_dir):
    rows = [
        r
        for r in load_table(csv_dir, "end_states.csv")
        if r["end_state"] in END_CLASSES
    ]
    assert rows, "fixture batch produced no classified runs"
    expected = defaultdict(lambda: {c: 0.0 for c in END_CLASSES})
    for r in rows:
        expected[(r["variant"], r["p_sigma"])][r["end_state"]] += float(r["weight"])

    fig = build_figure("end_state_hist", csv_dir)
    seen = {}
    for ax in fig.axes:
        variant, _, sigma = ax.get_title().partition(", p_sigma=")
        if not sigma:
            continue
        heights = list(ax.containers[0].datavalues)
        seen[(variant, sigma)] = dict(zip(END_CLASSES, heights))
    assert set(seen) == set(expected)
    for cell, weights in expected.items():
        total = sum(weights.values())
        for cls in END_CLASSES:
            assert seen[cell][cls] == pytest.approx(weights[cls] / total)


def test_spread_stack_totals_match_csv(csv_dir):
    rows = [
        r
        for r in load_table(csv_dir, "end_states.csv")
        if r["end_state"] in END_CLASSES and r["spread_bin"]
    ]
    total_weight = sum(float(r["weight"]) for r in rows)
    fig = build_figure("spread_stack", csv_dir)
    bar_total = 0.0
    for ax in fig.axes:
        for container in ax.containers:
            bar_total += sum(container.datavalues)
    assert bar_total == pytest.approx(total_weight)


def test_neighborhood_cross_section_uses_requested_population(csv_dir):
    fig = build_figure("neighborhood_heatmap", csv_dir)
    # Colorbars append their own axes; the cross-section is the one with lines.
    cross = next(ax for ax in fig.axes if ax.get_lines())
    labels = [line.get_label() for line in cross.get_lines()]
    assert any("n=9" in lab for lab in labels)
    assert any("random walk" in lab for lab in labels)


def test_missing_column_raises_schema_error(tmp_path):
    (tmp_path / "end_states.csv").write_text("run_id,seed\nx,1\n")
    with pytest.raises(SchemaError, match="end_states.csv"):
        build_figure("end_state_hist", tmp_path)


def test_missing_file_raises_schema_error(tmp_path):
    with pytest.raises(SchemaError, match="not found"):
        build_figure("origin_curves", tmp_path)


def test_empty_csv_renders_warning_axes(tmp_path):
    with (tmp_path / "interactions.csv").open("w", newline="") as fh:
        csv.writer(fh).writerow(["t_bin", "within", "between", "exchanges"])
    fig = build_figure("interaction_series", tmp_path)
    texts = [t.get_text() for ax in fig.axes for t in ax.texts]
    assert any("no data" in t for t in texts)


def test_rerender_is_idempotent_and_leaves_inputs_alone(csv_dir, tmp_path):
    before = (csv_dir / "end_states.csv").read_bytes()
    first = render("end_state_hist", csv_dir, tmp_path)
    second = render("end_state_hist", csv_dir, tmp_path)
    assert first == second
    assert (csv_dir / "end_states.csv").read_bytes() == before
