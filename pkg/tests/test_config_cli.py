import csv

import pytest

from swarmnaming.batch import expand_sweep, parse_sweep_args, run_batch, summarize
from swarmnaming.cli import main
from swarmnaming.config import ConfigError, RunConfig, load_config

GOOD = """
# quick experiment
n_robots = 10
warmup_s = 20
horizon_s = 120
p_speak = 0.002
variant = spatial
neighborhood_every_s = 0
"""


def write(tmp_path, text, name="run.cfg"):
    path = tmp_path / name
    path.write_text(text)
    return path


def test_load_config_parses_and_defaults(tmp_path):
    cfg = load_config(write(tmp_path, GOOD))
    assert cfg.n_robots == 10
    assert cfg.variant == "spatial"
    assert cfg.p_recruit == 0.7  # untouched default


def test_unknown_key_is_an_error(tmp_path):
    with pytest.raises(ConfigError, match="p_speek"):
        load_config(write(tmp_path, "p_speek = 0.1\n"))


def test_bad_value_names_key(tmp_path):
    with pytest.raises(ConfigError, match="p_speak"):
        load_config(write(tmp_path, "p_speak = fast\n"))


def test_validation_rules():
    with pytest.raises(ConfigError, match="horizon_s"):
        RunConfig(horizon_s=100.0, warmup_s=200.0).validate()
    with pytest.raises(ConfigError, match="p_recruit"):
        RunConfig(p_recruit=1.5).validate()
    with pytest.raises(ConfigError, match="nest_distance"):
        RunConfig(nest_distance=0.5).validate()
    with pytest.raises(ConfigError, match="variant"):
        RunConfig(variant="modern").validate()
    with pytest.raises(ConfigError, match="mode"):
        RunConfig(mode="hybrid").validate()
    with pytest.raises(ConfigError, match="nest_turn_radius"):
        RunConfig(nest_turn_radius=0.4).validate()


def test_expand_sweep_grid():
    base = RunConfig()
    grid = expand_sweep(base, {"p_speak": [0.001, 0.002], "variant": ["classic", "spatial"]})
    assert len(grid) == 4
    assert {(c.p_speak, c.variant) for c in grid} == {
        (0.001, "classic"),
        (0.001, "spatial"),
        (0.002, "classic"),
        (0.002, "spatial"),
    }


def test_parse_sweep_args_types():
    sweep = parse_sweep_args(["p_speak=0.001,0.002", "variant=classic,spatial"])
    assert sweep["p_speak"] == [0.001, 0.002]
    assert sweep["variant"] == ["classic", "spatial"]
    with pytest.raises(ConfigError):
        parse_sweep_args(["nope=1"])


def test_cli_simulate_and_summarize(tmp_path):
    cfg_path = write(tmp_path, GOOD)
    out = tmp_path / "out"
    assert main(["simulate", "--config", str(cfg_path), "--seed", "3", "--out", str(out)]) == 0
    run_dirs = list((out / "runs").iterdir())
    assert len(run_dirs) == 1
    assert (run_dirs[0] / "events.jsonl").exists()
    assert (run_dirs[0] / "summary.json").exists()

    summary_out = tmp_path / "csv"
    assert main(["summarize", "--in", str(out), "--out", str(summary_out)]) == 0
    for name in (
        "end_states.csv",
        "neighborhood.csv",
        "origins.csv",
        "interactions.csv",
        "populations.csv",
    ):
        assert (summary_out / name).exists(), name
    with (summary_out / "end_states.csv").open() as fh:
        rows = list(csv.DictReader(fh))
    assert rows and set(rows[0]) == {
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
    }


def test_cli_batch_empty_seed_list_succeeds(tmp_path):
    cfg_path = write(tmp_path, GOOD)
    out = tmp_path / "out"
    assert main(["batch", "--config", str(cfg_path), "--seeds", "0", "--out", str(out)]) == 0
    assert (out / "end_states.csv").exists()
    with (out / "end_states.csv").open() as fh:
        assert list(csv.DictReader(fh)) == []


def test_cli_batch_sweep(tmp_path):
    cfg_path = write(tmp_path, GOOD)
    out = tmp_path / "out"
    code = main(
        [
            "batch",
            "--config",
            str(cfg_path),
            "--seeds",
            "2",
            "--sweep",
            "variant=classic,spatial",
            "--out",
            str(out),
        ]
    )
    assert code == 0
    assert len(list((out / "runs").iterdir())) == 4
    with (out / "batch_manifest.csv").open() as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 4
    assert all(r["status"] in ("converged", "timeout") for r in rows)


def test_cli_config_error_exit_code(tmp_path):
    bad = write(tmp_path, "p_speak = 2.0\n")
    assert main(["simulate", "--config", str(bad), "--seed", "1", "--out", str(tmp_path / "o")]) == 2


def test_batch_api_determinism_across_workers(tmp_path):
    cfg = load_config(write(tmp_path, GOOD))
    out1 = tmp_path / "w1"
    out2 = tmp_path / "w2"
    run_batch(cfg, seeds=range(2), out_dir=out1, workers=1)
    run_batch(cfg, seeds=range(2), out_dir=out2, workers=2)
    runs1 = sorted((out1 / "runs").glob("*/events.jsonl"))
    runs2 = sorted((out2 / "runs").glob("*/events.jsonl"))
    assert [p.name for p in runs1] == [p.name for p in runs2]
    for a, b in zip(runs1, runs2):
        assert a.read_bytes() == b.read_bytes()
