"""Batch execution over seeds and parameter grids, per-run persistence, and
CSV summarization of finished run directories."""
from __future__ import annotations

import csv
import hashlib
import itertools
import json
import traceback
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Iterable, Optional

from . import metrics
from .config import Mode, RunConfig, parse_value
from .engine import load_events, load_summary, simulate, write_run

GAME_MODES = {Mode.FORAGING.value, Mode.MEAN_FIELD.value}
COMMIT_MODES = {Mode.FORAGING.value, Mode.COMMITMENT_ONLY.value}

END_STATE_COLUMNS = [
    "run_id",
    "seed",
    "variant",
    "p_speak",
    "p_sigma",
    "end_state",
    "weight",
    "spread_bin",
    "t_two_words",
    "t_convergence",
]


def run_id_for(cfg: RunConfig) -> str:
    """Readable cell name plus a config digest so any sweep key is safe."""
    parts = [cfg.mode, cfg.variant, f"ps{cfg.p_speak:g}", f"ci{cfg.p_cross_inhibit:g}"]
    if cfg.mode == Mode.LOCKED_POPULATIONS.value:
        parts.append(f"na{cfg.locked_n_a}")
    blob = json.dumps({k: v for k, v in cfg.to_dict().items() if k != "seed"},
                      sort_keys=True)
    parts.append(hashlib.blake2s(blob.encode(), digest_size=3).hexdigest())
    parts.append(f"seed{cfg.seed}")
    return "-".join(parts)


def end_state_rows(run_id: str, cfg: RunConfig, state: metrics.EndState) -> list[dict]:
    base = {
        "run_id": run_id,
        "seed": cfg.seed,
        "variant": cfg.variant,
        "p_speak": f"{cfg.p_speak:g}",
        "p_sigma": f"{cfg.p_cross_inhibit:g}",
        "spread_bin": state.spread_bin or "",
        "t_two_words": "" if state.t_two_words is None else f"{state.t_two_words:g}",
        "t_convergence": "" if state.t_convergence is None else f"{state.t_convergence:g}",
    }
    if state.status != "classified":
        return [dict(base, end_state=state.status, weight="1")]
    return [
        dict(base, end_state=label, weight=f"{weight:g}")
        for label, weight in sorted(state.classes.items())
        if weight > 0
    ]


def run_and_write(cfg: RunConfig, runs_dir: Path) -> dict:
    """Execute one run, persist it, and return its manifest entry."""
    run_id = run_id_for(cfg)
    record = simulate(cfg)
    state = metrics.detect_end_states(record.events, cfg.n_robots)
    record.summary["end_state"] = {
        "status": state.status,
        "classes": state.classes,
        "spread_bin": state.spread_bin,
        "t_two_words": state.t_two_words,
        "t_convergence": state.t_convergence,
    }
    write_run(record, runs_dir / run_id)
    return {
        "run_id": run_id,
        "cfg": cfg,
        "status": record.summary["status"],
        "t_end": record.summary["t_end"],
        "end_rows": end_state_rows(run_id, cfg, state),
        "error": "",
    }


def _worker(args) -> dict:
    cfg, runs_dir = args
    try:
        return run_and_write(cfg, Path(runs_dir))
    except Exception:  # per-run failures must not sink the batch
        return {
            "run_id": run_id_for(cfg),
            "cfg": cfg,
            "status": "error",
            "t_end": "",
            "end_rows": [],
            "error": traceback.format_exc(limit=3).replace("\n", " | "),
        }


def expand_sweep(template: RunConfig, sweep: dict[str, list]) -> list[RunConfig]:
    """Cartesian product of sweep values applied over the template config."""
    if not sweep:
        return [template]
    keys = list(sweep)
    configs = []
    for combo in itertools.product(*(sweep[k] for k in keys)):
        configs.append(template.replace(**dict(zip(keys, combo))))
    return configs


def parse_sweep_args(args: Iterable[str]) -> dict[str, list]:
    sweep: dict[str, list] = {}
    for spec in args:
        key, _, values = spec.partition("=")
        key = key.strip()
        sweep[key] = [parse_value(key, v) for v in values.split(",")]
    return sweep


def run_batch(
    template: RunConfig,
    seeds: Iterable[int],
    sweep: Optional[dict[str, list]] = None,
    out_dir: str | Path = "out",
    workers: int = 1,
) -> list[dict]:
    """Independent runs over seeds x parameter grid.

    Results are identical whatever the worker count: every run owns its
    generator and its output directory, and rows are ordered after the join.
    """
    out = Path(out_dir)
    runs_dir = out / "runs"
    runs_dir.mkdir(parents=True, exist_ok=True)
    jobs = [
        (cell.replace(seed=seed), str(runs_dir))
        for cell in expand_sweep(template, sweep or {})
        for seed in seeds
    ]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_worker, jobs))
    else:
        results = [_worker(job) for job in jobs]
    results.sort(key=lambda r: r["run_id"])

    with (out / "batch_manifest.csv").open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["run_id", "seed", "mode", "status", "t_end", "error"])
        for r in results:
            writer.writerow(
                [r["run_id"], r["cfg"].seed, r["cfg"].mode, r["status"], r["t_end"], r["error"]]
            )
    _write_csv(
        out / "end_states.csv",
        END_STATE_COLUMNS,
        [row for r in results for row in r["end_rows"]],
    )
    return results


def _write_csv(path: Path, columns: list[str], rows: list[dict]) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=columns)
        writer.writeheader()
        for row in rows:
            writer.writerow(row)


# ------------------------------------------------------------------ summarize


def summarize(
    in_dir: str | Path,
    out_dir: str | Path,
    origin_bin_s: float = 100.0,
    interaction_bin_s: float = 100.0,
    population_every_s: float = 100.0,
) -> dict[str, Path]:
    """Aggregate run directories into the analysis CSVs.

    Emits end_states.csv (per-run rows recomputed from the logs),
    neighborhood.csv, origins.csv, interactions.csv and populations.csv.
    """
    in_path = Path(in_dir)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    run_dirs = sorted(p for p in (in_path / "runs").glob("*") if p.is_dir())

    end_rows: list[dict] = []
    neigh_counts: Counter = Counter()
    origin_counts: dict[tuple[float, bool, str], int] = {}
    n_origin_runs = 0
    interaction_bins: dict[float, dict] = {}
    alive_per_bin: dict[float, int] = {}
    pop_rows: list[dict] = []

    for run_dir in run_dirs:
        summary = load_summary(run_dir)
        cfg = RunConfig(**summary["config"])
        events = load_events(run_dir)
        run_id = run_dir.name

        state = metrics.detect_end_states(events, cfg.n_robots)
        end_rows.extend(end_state_rows(run_id, cfg, state))

        neigh_counts.update(metrics.neighborhood_counts(events))

        if cfg.mode in GAME_MODES:
            n_origin_runs += 1
            origins = metrics.first_word_origins(events, cfg.n_robots)
            for key, count in metrics.origin_series(
                origins, origin_bin_s, summary["t_end"]
            ).items():
                origin_counts[key] = origin_counts.get(key, 0) + count

        if cfg.mode in COMMIT_MODES:
            tally = metrics.interaction_tally(events, cfg.n_robots, interaction_bin_s)
            for t_bin, row in tally.items():
                agg = interaction_bins.setdefault(
                    t_bin, {"within": 0, "between": 0, "exchanges": 0}
                )
                for k in agg:
                    agg[k] += row[k]
            n_bins = int(summary["t_end"] // interaction_bin_s) + 1
            for b in range(n_bins):
                t_bin = float(b * interaction_bin_s)
                alive_per_bin[t_bin] = alive_per_bin.get(t_bin, 0) + 1

        stride = max(1, int(round(population_every_s / cfg.snapshot_every_s)))
        for idx, (t, n_u, n_a, n_b) in enumerate(metrics.population_series(events)):
            if idx % stride:
                continue
            pop_rows.append(
                {
                    "run_id": run_id,
                    "seed": cfg.seed,
                    "variant": cfg.variant,
                    "p_speak": f"{cfg.p_speak:g}",
                    "p_sigma": f"{cfg.p_cross_inhibit:g}",
                    "t": f"{t:g}",
                    "n_u": n_u,
                    "n_a": n_a,
                    "n_b": n_b,
                }
            )

    paths = {}
    paths["end_states"] = out / "end_states.csv"
    _write_csv(paths["end_states"], END_STATE_COLUMNS, end_rows)

    paths["neighborhood"] = out / "neighborhood.csv"
    _write_csv(
        paths["neighborhood"],
        ["n_small", "scope", "k", "probability"],
        [
            {"n_small": n, "scope": scope, "k": k, "probability": f"{p:.6g}"}
            for n, scope, k, p in metrics.neighborhood_histogram(neigh_counts)
        ],
    )

    paths["origins"] = out / "origins.csv"
    _write_csv(
        paths["origins"],
        ["t_bin", "committed", "trigger", "rate"],
        [
            {
                "t_bin": f"{t_bin:g}",
                "committed": str(committed).lower(),
                "trigger": trigger,
                "rate": f"{count / (origin_bin_s * max(n_origin_runs, 1)):.6g}",
            }
            for (t_bin, committed, trigger), count in sorted(origin_counts.items())
        ],
    )

    paths["interactions"] = out / "interactions.csv"
    _write_csv(
        paths["interactions"],
        ["t_bin", "within", "between", "exchanges"],
        [
            {
                "t_bin": f"{t_bin:g}",
                "within": f"{row['within'] / alive_per_bin[t_bin]:.6g}",
                "between": f"{row['between'] / alive_per_bin[t_bin]:.6g}",
                "exchanges": f"{row['exchanges'] / alive_per_bin[t_bin]:.6g}",
            }
            for t_bin, row in sorted(interaction_bins.items())
            if alive_per_bin.get(t_bin)
        ],
    )

    paths["populations"] = out / "populations.csv"
    _write_csv(
        paths["populations"],
        ["run_id", "seed", "variant", "p_speak", "p_sigma", "t", "n_u", "n_a", "n_b"],
        pop_rows,
    )
    return paths
