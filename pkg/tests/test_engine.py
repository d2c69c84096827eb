import json
from collections import Counter

import numpy as np

from swarmnaming.commitment import Commitment
from swarmnaming.config import RunConfig
from swarmnaming.engine import _Engine, simulate, write_run, load_events, load_summary
from swarmnaming.metrics import check_conservation, validate_game_laws
from swarmnaming.motion import MotionMode

FAST = dict(warmup_s=50.0, horizon_s=600.0, neighborhood_every_s=0.0, seed=7)


def types(events):
    return Counter(e["type"] for e in events)


def test_same_seed_reproduces_log_bitwise():
    cfg = RunConfig(**FAST)
    a = simulate(cfg)
    b = simulate(cfg)
    assert a.events_jsonl() == b.events_jsonl()
    sa = dict(a.summary)
    sb = dict(b.summary)
    sa.pop("wall_s")
    sb.pop("wall_s")
    assert sa == sb


def test_different_seeds_differ():
    a = simulate(RunConfig(**{**FAST, "seed": 1}))
    b = simulate(RunConfig(**{**FAST, "seed": 2}))
    assert a.events_jsonl() != b.events_jsonl()


def test_warmup_is_silent():
    cfg = RunConfig(**{**FAST, "horizon_s": 400.0, "warmup_s": 200.0})
    rec = simulate(cfg)
    quiet = {
        "utterance",
        "game",
        "word_created",
        "discovery",
        "recruitment",
        "cross_inhibition",
        "abandonment",
    }
    for ev in rec.events:
        if ev["type"] in quiet:
            assert ev["t"] > cfg.warmup_s


def test_snapshot_conservation_and_cadence():
    cfg = RunConfig(**FAST)
    rec = simulate(cfg)
    assert check_conservation(rec.events, cfg.n_robots) == []
    snaps = [e for e in rec.events if e["type"] == "snapshot"]
    assert snaps[0]["t"] == 0.0
    assert snaps[1]["t"] == cfg.snapshot_every_s


def test_zero_speak_probability_times_out_with_no_utterances():
    cfg = RunConfig(**{**FAST, "p_speak": 0.0, "horizon_s": 300.0})
    rec = simulate(cfg)
    assert rec.summary["status"] == "timeout"
    counts = types(rec.events)
    assert counts["utterance"] == 0
    assert counts["game"] == 0
    assert counts["word_created"] == 0


def test_game_laws_hold_on_real_run():
    cfg = RunConfig(**{**FAST, "horizon_s": 1500.0, "p_speak": 0.002})
    rec = simulate(cfg)
    assert validate_game_laws(rec.events, cfg.n_robots) == []


def test_word_ids_unique_and_single_provenance():
    cfg = RunConfig(**{**FAST, "variant": "spatial", "horizon_s": 1500.0})
    rec = simulate(cfg)
    seen = {}
    for ev in rec.events:
        if ev["type"] == "word_created":
            wid = ev["payload"]["word"]
            assert wid not in seen
            seen[wid] = ev["payload"]["provenance"]
            assert ev["payload"]["provenance"] in ("A", "B")


def test_mode_commitment_invariant_throughout():
    cfg = RunConfig(**{**FAST, "horizon_s": 400.0})
    eng = _Engine(cfg)
    for step in range(1, eng.max_steps + 1):
        eng.step = step
        warm = step <= eng.warmup_steps
        if step == eng.warmup_steps + 1:
            blind = eng.mode == int(MotionMode.BLIND_WALK)
            eng.mode[blind] = int(MotionMode.EXPLORE)
            eng.prev_area[:] = 0
        eng._motion_phase()
        eng._arrival_phase(warm)
        if not warm:
            eng._beacon_phase()
            eng._game_phase()
        committed = eng.commit != int(Commitment.UNCOMMITTED)
        goto = eng.mode >= int(MotionMode.GOTO_NEST)
        explore_or_nest = (eng.mode == int(MotionMode.EXPLORE)) | (
            eng.mode == int(MotionMode.GOTO_NEST)
        )
        # Committed robots shuttle; uncommitted ones explore or head home.
        assert np.all(goto[committed])
        if warm:
            assert np.all(eng.mode == int(MotionMode.BLIND_WALK))
        else:
            assert np.all(explore_or_nest[~committed])


def test_displacement_bounded_each_step():
    cfg = RunConfig(**{**FAST, "n_robots": 20, "horizon_s": 100.0, "warmup_s": 10.0})
    eng = _Engine(cfg)
    prev = eng.pos.copy()
    cap = cfg.speed * cfg.dt + 1e-12
    for step in range(1, eng.max_steps + 1):
        eng.step = step
        eng._motion_phase()
        moved = np.hypot(*(eng.pos - prev).T)
        assert np.all(moved <= cap)
        prev = eng.pos.copy()


def test_mean_field_converges_and_inventory_peaks_before_end():
    cfg = RunConfig(
        n_robots=10,
        mode="mean_field",
        warmup_s=0.0,
        horizon_s=12000.0,
        p_speak=0.005,
        seed=3,
        neighborhood_every_s=0.0,
    )
    rec = simulate(cfg)
    assert rec.summary["status"] == "converged"
    # Total inventory mass rises above N before collapsing to N singletons.
    from swarmnaming.metrics import InventoryReplay

    replay = InventoryReplay(cfg.n_robots)
    peak = 0
    for ev in rec.events:
        if ev["type"] in ("word_created", "game"):
            replay.apply(ev)
            peak = max(peak, sum(len(i) for i in replay.inventories))
    assert peak > cfg.n_robots
    assert sum(len(i) for i in replay.inventories) == cfg.n_robots


def test_locked_mode_disables_all_transitions_and_game():
    cfg = RunConfig(
        mode="locked_populations",
        locked_n_a=20,
        warmup_s=50.0,
        horizon_s=150.0,
        seed=5,
        neighborhood_every_s=1.0,
    )
    rec = simulate(cfg)
    counts = types(rec.events)
    for kind in ("discovery", "recruitment", "cross_inhibition", "utterance", "game",
                 "word_created"):
        assert counts[kind] == 0
    assert counts["neighborhood"] > 0
    # Sub-population labels are frozen: every snapshot shows the same split.
    for ev in rec.events:
        if ev["type"] == "snapshot":
            assert (ev["payload"]["n_a"], ev["payload"]["n_b"]) == (20, 30)


def test_neighborhood_partition_identity_and_n_small():
    cfg = RunConfig(
        mode="locked_populations",
        locked_n_a=15,
        warmup_s=20.0,
        horizon_s=60.0,
        seed=5,
    )
    rec = simulate(cfg)
    samples = [e for e in rec.events if e["type"] == "neighborhood"]
    assert samples
    for ev in samples:
        p = ev["payload"]
        assert p["n_small"] == 15
        assert [a + b for a, b in zip(p["within"], p["between"])] == p["whole"]


def test_random_walk_reference_has_no_commitment_or_words():
    cfg = RunConfig(
        mode="random_walk_reference",
        warmup_s=20.0,
        horizon_s=100.0,
        seed=2,
        neighborhood_every_s=1.0,
    )
    rec = simulate(cfg)
    counts = types(rec.events)
    assert counts["neighborhood"] > 0
    for kind in ("discovery", "recruitment", "utterance", "game", "word_created"):
        assert counts[kind] == 0
    for ev in rec.events:
        if ev["type"] == "snapshot":
            assert ev["payload"]["n_u"] == cfg.n_robots


def test_run_io_roundtrip(tmp_path):
    cfg = RunConfig(**{**FAST, "horizon_s": 300.0})
    rec = simulate(cfg)
    out = write_run(rec, tmp_path / "run0")
    events = load_events(out)
    assert events == rec.events
    summary = load_summary(out)
    assert summary["status"] == rec.summary["status"]
    assert summary["config"]["seed"] == cfg.seed


def test_snapshot_counts_match_event_replay():
    """Every snapshot field is recomputable from the event stream alone:
    the engine's incremental counters cannot drift from the log."""
    from swarmnaming.metrics import CommitmentReplay, InventoryReplay, build_word_table

    cfg = RunConfig(
        **{**FAST, "variant": "spatial", "horizon_s": 1200.0, "p_speak": 0.002}
    )
    rec = simulate(cfg)
    prov = {w: meta["provenance"] for w, meta in build_word_table(rec.events).items()}
    com = CommitmentReplay(cfg.n_robots)
    inv = InventoryReplay(cfg.n_robots)
    checked = 0
    for ev in rec.events:
        etype = ev["type"]
        if etype in ("discovery", "recruitment", "cross_inhibition", "abandonment"):
            com.apply(ev)
        elif etype in ("word_created", "game"):
            inv.apply(ev)
        elif etype == "snapshot":
            p = ev["payload"]
            n_a, n_b = com.counts()
            assert (p["n_a"], p["n_b"]) == (n_a, n_b), ev
            assert p["n_u"] == cfg.n_robots - n_a - n_b
            n_w_a = n_w_b = n_match = n_mismatch = 0
            for robot, holder in enumerate(inv.inventories):
                has_a = any(prov[w] == "A" for w in holder)
                has_b = any(prov[w] == "B" for w in holder)
                n_w_a += has_a
                n_w_b += has_b
                state = com.state[robot]
                if state == "A":
                    n_match += has_a
                    n_mismatch += has_b
                elif state == "B":
                    n_match += has_b
                    n_mismatch += has_a
            assert p["n_w_a"] == n_w_a and p["n_w_b"] == n_w_b, ev
            assert p["n_w_none"] == sum(1 for h in inv.inventories if not h)
            assert p["n_match"] == n_match and p["n_mismatch"] == n_mismatch, ev
            assert p["words_a"] == sum(1 for w in inv.ref if prov[w] == "A")
            assert p["words_b"] == sum(1 for w in inv.ref if prov[w] == "B")
            checked += 1
    assert checked > 50


def test_committed_counts_monotone_without_cross_inhibition():
    cfg = RunConfig(
        **{**FAST, "p_cross_inhibit": 0.0, "mode": "commitment_only", "horizon_s": 1500.0}
    )
    rec = simulate(cfg)
    last_a = last_b = 0
    for ev in rec.events:
        if ev["type"] == "snapshot":
            assert ev["payload"]["n_a"] >= last_a
            assert ev["payload"]["n_b"] >= last_b
            last_a, last_b = ev["payload"]["n_a"], ev["payload"]["n_b"]
    assert last_a + last_b > 0


def test_distinct_words_increase_only_at_creations():
    cfg = RunConfig(**{**FAST, "horizon_s": 1200.0, "p_speak": 0.002})
    rec = simulate(cfg)
    from swarmnaming.metrics import InventoryReplay

    replay = InventoryReplay(cfg.n_robots)
    prev = 0
    for ev in rec.events:
        if ev["type"] not in ("word_created", "game"):
            continue
        replay.apply(ev)
        count = replay.distinct()
        if count > prev:
            assert ev["type"] == "word_created"
        prev = count


def test_fast_forward_leaves_log_unchanged():
    """After full consensus a game-less run only repeats its snapshot; the
    shortcut must emit the exact same log as plain integration."""
    cfg = RunConfig(
        mode="commitment_only", horizon_s=4000.0, neighborhood_every_s=0.0, seed=3
    )
    full = _Engine(cfg, allow_fast_forward=False).run()
    fast = _Engine(cfg, allow_fast_forward=True).run()
    assert full.events_jsonl() == fast.events_jsonl()
    assert full.summary["final_counts"] == fast.summary["final_counts"]
    assert full.summary["t_end"] == fast.summary["t_end"]


def test_abandonment_drains_commitment():
    cfg = RunConfig(
        **{
            **FAST,
            "mode": "commitment_only",
            "p_abandon": 0.05,
            "horizon_s": 800.0,
        }
    )
    rec = simulate(cfg)
    assert types(rec.events)["abandonment"] > 0
    assert validate_game_laws(rec.events, cfg.n_robots) == []
