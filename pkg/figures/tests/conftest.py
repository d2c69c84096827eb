"""Shared fixture: a real CSV summary directory produced by the simulator's
command-line interface (the only surface this package consumes)."""
import pytest

from swarmnaming.cli import main as swarm_main


@pytest.fixture(scope="session")
def csv_dir(tmp_path_factory):
    root = tmp_path_factory.mktemp("summaries")
    runs = root / "batch"
    cfg = root / "batch.cfg"
    cfg.write_text(
        "\n".join(
            [
                "warmup_s = 200",
                "horizon_s = 3000",
                "p_speak = 0.001",
                "variant = spatial",
                "neighborhood_every_s = 0",
            ]
        )
        + "\n"
    )
    code = swarm_main(
        [
            "batch",
            "--config",
            str(cfg),
            "--seeds",
            "20",
            "--workers",
            "2",
            "--out",
            str(runs),
        ]
    )
    assert code == 0

    locked_cfg = root / "locked.cfg"
    locked_cfg.write_text(
        "\n".join(
            [
                "mode = locked_populations",
                "locked_n_a = 9",
                "warmup_s = 200",
                "horizon_s = 700",
                "neighborhood_every_s = 1",
            ]
        )
        + "\n"
    )
    for seed in (0, 1):
        assert (
            swarm_main(
                [
                    "simulate",
                    "--config",
                    str(locked_cfg),
                    "--seed",
                    str(seed),
                    "--out",
                    str(runs),
                ]
            )
            == 0
        )
    rw_cfg = root / "rw.cfg"
    rw_cfg.write_text(
        "\n".join(
            [
                "mode = random_walk_reference",
                "warmup_s = 200",
                "horizon_s = 700",
                "neighborhood_every_s = 1",
            ]
        )
        + "\n"
    )
    assert (
        swarm_main(
            ["simulate", "--config", str(rw_cfg), "--seed", "0", "--out", str(runs)]
        )
        == 0
    )

    out = root / "csv"
    assert swarm_main(["summarize", "--in", str(runs), "--out", str(out)]) == 0
    return out
