"""Deterministic simulation engine.

Each control step runs a fixed phase order:

1. motion for all robots (vectorized, against the position snapshot of the
   previous step's end),
2. arrival events: exploitation-loop turnarounds, discovery, spatial word
   creation, then the return-to-nest lottery,
3. beacon selection and commitment transitions (nest-gated hearers),
4. speak decisions (word creation in the classic variant),
5. utterance delivery and hearer updates,
6. snapshots, neighborhood samples, convergence check.

All randomness comes from one generator seeded per run and is consumed in
phase order, then robot-index order within a phase, so a (config, seed) pair
reproduces its event log bit for bit.
"""
from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from . import commitment as cm
from . import motion as mo
from . import naming_game as ng
from .arena import Arena, AreaKind, classify_points, closest_resource
from .commitment import Commitment
from .config import Mode, RunConfig, Variant
from .motion import MotionMode

TWO_PI = 2.0 * math.pi
_RES_LABEL = {AreaKind.RESOURCE_A: "A", AreaKind.RESOURCE_B: "B"}
_COMMIT_LABEL = {Commitment.A: "A", Commitment.B: "B"}
_GOTO_OF_COMMIT = {Commitment.A: MotionMode.GOTO_A, Commitment.B: MotionMode.GOTO_B}


@dataclass
class SimScript:
    """Deterministic overrides for scripted test scenarios (API only)."""

    positions: Optional[list[tuple[float, float]]] = None
    headings: Optional[list[float]] = None
    speak: Optional[dict[int, tuple[int, ...]]] = None  # step -> speaker ids
    word_pick: dict = field(default_factory=dict)  # (step, robot) -> sorted-inventory index
    hear_pick: dict = field(default_factory=dict)  # (step, robot) -> inbox index


@dataclass
class RunRecord:
    config: RunConfig
    events: list
    summary: dict

    def events_jsonl(self) -> str:
        return "".join(json.dumps(e, separators=(",", ":")) + "\n" for e in self.events)


class _Engine:
    def __init__(
        self,
        cfg: RunConfig,
        script: Optional[SimScript] = None,
        allow_fast_forward: bool = True,
    ):
        cfg.validate()
        self.cfg = cfg
        self.script = script
        self.allow_fast_forward = allow_fast_forward
        self.arena = Arena.from_params(cfg.area_radius, cfg.nest_distance)
        self.rng = np.random.Generator(np.random.PCG64(cfg.seed))
        self.n = cfg.n_robots
        self.dt = cfg.dt
        self.mode_flags(cfg)

        self.max_steps = int(round(cfg.horizon_s / cfg.dt))
        self.warmup_steps = int(round(cfg.warmup_s / cfg.dt))
        self.snap_steps = max(1, int(round(cfg.snapshot_every_s / cfg.dt)))
        self.neigh_steps = int(round(cfg.neighborhood_every_s / cfg.dt))

        self.comm_r2 = cfg.comm_radius**2
        self.avoid_r2 = cfg.avoid_radius**2

        self._init_state()
        self.events: list = []
        self.word_prov: list[str] = []
        self.ref: dict[int, int] = {}
        self.surv = {"A": 0, "B": 0}
        self.n_empty = self.n
        self.inventories: list[set[int]] = [set() for _ in range(self.n)]
        self.step = 0
        self._within_step = -1
        self._within_mat = None

    def mode_flags(self, cfg: RunConfig) -> None:
        mode = Mode(cfg.mode)
        self.motion_on = mode != Mode.MEAN_FIELD
        self.sensing_on = mode in (Mode.FORAGING, Mode.COMMITMENT_ONLY)
        self.locked_loop = mode == Mode.LOCKED_POPULATIONS
        self.beacons_on = mode in (Mode.FORAGING, Mode.COMMITMENT_ONLY)
        self.game_on = mode in (Mode.FORAGING, Mode.MEAN_FIELD)
        self.pairwise = mode == Mode.MEAN_FIELD
        self.mode_enum = mode

    # ------------------------------------------------------------------ init

    def _init_state(self):
        cfg, n = self.cfg, self.n
        nest = self.arena.nest_center
        if self.script is not None and self.script.positions is not None:
            self.pos = np.array(self.script.positions, dtype=float)
            heads = self.script.headings or [0.0] * n
            self.heading = np.array(heads, dtype=float)
        elif self.mode_enum == Mode.MEAN_FIELD:
            # No motion: park everyone at the nest center.
            self.pos = np.tile(np.array(nest, dtype=float), (n, 1))
            self.heading = np.zeros(n)
        elif self.mode_enum == Mode.LOCKED_POPULATIONS:
            # Locked protocol: the first locked_n_a robots are pinned to A,
            # the rest to B, each starting inside its own resource area.
            centers = np.empty((n, 2))
            centers[: cfg.locked_n_a] = self.arena.resource_a_center
            centers[cfg.locked_n_a :] = self.arena.resource_b_center
            radius = cfg.area_radius * np.sqrt(self.rng.random(n))
            angle = TWO_PI * self.rng.random(n)
            self.pos = centers + np.stack(
                [radius * np.cos(angle), radius * np.sin(angle)], axis=1
            )
            self.heading = TWO_PI * self.rng.random(n)
        else:
            # Start inside the nest, scattered uniformly.
            radius = cfg.area_radius * np.sqrt(self.rng.random(n))
            angle = TWO_PI * self.rng.random(n)
            self.pos = np.array(nest, dtype=float) + np.stack(
                [radius * np.cos(angle), radius * np.sin(angle)], axis=1
            )
            self.heading = TWO_PI * self.rng.random(n)

        if self.mode_enum == Mode.LOCKED_POPULATIONS:
            self.commit = np.where(
                np.arange(n) < cfg.locked_n_a, int(Commitment.A), int(Commitment.B)
            ).astype(np.int8)
            self.mode = np.full(n, int(MotionMode.GOTO_NEST), dtype=np.int8)
            self.n_committed_a = cfg.locked_n_a
            self.n_committed_b = n - cfg.locked_n_a
        else:
            self.commit = np.full(n, int(Commitment.UNCOMMITTED), dtype=np.int8)
            start = MotionMode.BLIND_WALK if self.motion_on else MotionMode.EXPLORE
            self.mode = np.full(n, int(start), dtype=np.int8)
            self.n_committed_a = 0
            self.n_committed_b = 0
        self.locked_label = self.commit.copy()

        self.prev_area = np.full(n, int(AreaKind.OPEN), dtype=np.int8)

        # Navigation target per motion-mode code.
        self.target_table = np.zeros((5, 2))
        self.target_table[int(MotionMode.GOTO_NEST)] = self.arena.nest_center
        self.target_table[int(MotionMode.GOTO_A)] = self.arena.resource_a_center
        self.target_table[int(MotionMode.GOTO_B)] = self.arena.resource_b_center

        self._refresh_pairs()

    def _refresh_pairs(self):
        x = self.pos[:, 0]
        y = self.pos[:, 1]
        dx = x[:, None] - x[None, :]
        dy = y[:, None] - y[None, :]
        self.d2 = dx * dx + dy * dy
        np.fill_diagonal(self.d2, np.inf)

    def _within(self) -> np.ndarray:
        if self._within_step != self.step:
            self._within_mat = self.d2 <= self.comm_r2
            self._within_step = self.step
        return self._within_mat

    # ---------------------------------------------------------------- events

    def _t(self) -> float:
        return round(self.step * self.dt, 6)

    def _log(self, etype: str, robot, payload: dict):
        self.events.append(
            {"t": self._t(), "type": etype, "robot": robot, "payload": payload}
        )

    # ------------------------------------------------------------- inventory

    def _ref_add(self, word: int):
        c = self.ref.get(word, 0)
        self.ref[word] = c + 1
        if c == 0:
            self.surv[self.word_prov[word]] += 1

    def _ref_release(self, word: int):
        c = self.ref[word] - 1
        if c == 0:
            del self.ref[word]
            self.surv[self.word_prov[word]] -= 1
        else:
            self.ref[word] = c

    def _register_word(self, creator: int, provenance: str, trigger: str) -> int:
        word = len(self.word_prov)
        self.word_prov.append(provenance)
        self._log(
            "word_created",
            creator,
            {
                "word": word,
                "provenance": provenance,
                "trigger": trigger,
                "committed": bool(self.commit[creator] != int(Commitment.UNCOMMITTED)),
            },
        )
        return word

    # ----------------------------------------------------------------- steps

    def run(self) -> RunRecord:
        t0 = time.perf_counter()
        self._log_snapshot()
        if self._neigh_due(0):
            self._log_neighborhood()
        converged_word = None
        for step in range(1, self.max_steps + 1):
            self.step = step
            warm = step <= self.warmup_steps
            if step == self.warmup_steps + 1 and self.motion_on:
                blind = self.mode == int(MotionMode.BLIND_WALK)
                self.mode[blind] = int(MotionMode.EXPLORE)
                # Robots already standing in an area sense it on their first
                # searching step.
                self.prev_area[:] = int(AreaKind.OPEN)
            if self.motion_on:
                self._motion_phase()
                self._arrival_phase(warm)
            if self.beacons_on and not warm:
                self._beacon_phase()
            if self.game_on and not warm:
                self._game_phase()
            if step % self.snap_steps == 0:
                self._log_snapshot()
            if self._neigh_due(step):
                self._log_neighborhood()
            if self.game_on and len(self.ref) == 1 and self.n_empty == 0:
                converged_word = next(iter(self.ref))
                self._log("converged", None, {"word": int(converged_word)})
                break
            if self.allow_fast_forward and self._absorbed():
                # Nothing stochastic can be logged anymore: emit the
                # remaining constant snapshots and stop integrating.
                self._emit_remaining_snapshots()
                break

        counts = self._commit_counts()
        summary = {
            "seed": self.cfg.seed,
            "status": "converged" if converged_word is not None else "timeout",
            "t_end": self._t(),
            "t_convergence": self._t() if converged_word is not None else None,
            "final_word": int(converged_word) if converged_word is not None else None,
            "final_counts": {"n_u": counts[0], "n_a": counts[1], "n_b": counts[2]},
            "n_words_created": len(self.word_prov),
            "config": self.cfg.to_dict(),
            "wall_s": round(time.perf_counter() - t0, 3),
        }
        return RunRecord(self.cfg, self.events, summary)

    def _neigh_due(self, step: int) -> bool:
        return (
            self.neigh_steps > 0
            and self.motion_on
            and step % self.neigh_steps == 0
            and step >= self.warmup_steps
        )

    def _absorbed(self) -> bool:
        """True when the rest of the run can only repeat the last snapshot.

        Requires: no game (no word events), no neighborhood sampling (no
        position-dependent events), and a commitment state no beacon,
        discovery or abandonment can ever change.
        """
        if self.game_on:
            return False
        if self.neigh_steps > 0 and self.motion_on:
            return False
        if self.sensing_on:
            if self.cfg.p_abandon > 0:
                return False
            if self.n_committed_a != self.n and self.n_committed_b != self.n:
                return False
        return True

    def _emit_remaining_snapshots(self):
        step = (self.step // self.snap_steps + 1) * self.snap_steps
        while step <= self.max_steps:
            self.step = step
            self._log_snapshot()
            step += self.snap_steps
        self.step = self.max_steps

    # ---------------------------------------------------------------- motion

    def _motion_phase(self):
        cfg, n = self.cfg, self.n
        pos = self.pos
        desired = self.heading + self.rng.standard_normal(n) * cfg.turn_sigma
        goto = self.mode >= int(MotionMode.GOTO_NEST)
        any_goto = bool(goto.any())
        if any_goto:
            tvec = self.target_table[self.mode]
            tdx = tvec[:, 0] - pos[:, 0]
            tdy = tvec[:, 1] - pos[:, 1]
            np.copyto(desired, np.arctan2(tdy, tdx), where=goto)

        defl = None
        if self.avoid_r2 > 0:
            ii, jj = np.nonzero(self.d2 < self.avoid_r2)
            if len(ii):
                bear = np.arctan2(pos[jj, 1] - pos[ii, 1], pos[jj, 0] - pos[ii, 0])
                rel = (bear - desired[ii] + np.pi) % TWO_PI - np.pi
                rel = np.where(rel == -np.pi, np.pi, rel)
                ahead = np.abs(rel) < np.pi / 2
                dist = np.sqrt(self.d2[ii, jj])
                side = np.where(rel >= 0, 1.0, -1.0)
                contrib = np.where(
                    ahead,
                    -side * (1.0 - dist / cfg.avoid_radius) * mo.DEFLECT_MAX,
                    0.0,
                )
                defl = np.bincount(ii, weights=contrib, minlength=n)
                np.clip(defl, -np.pi, np.pi, out=defl)
                desired = desired + defl

        heading = desired % TWO_PI
        max_step = cfg.speed * cfg.dt
        cos_h = np.cos(heading)
        sin_h = np.sin(heading)
        if any_goto:
            # Undeflected navigators land exactly on their target.
            land = goto if defl is None else goto & (defl == 0.0)
            step_len = np.full(n, max_step)
            dist_t = np.sqrt(tdx * tdx + tdy * tdy)
            np.copyto(step_len, np.minimum(max_step, dist_t), where=land)
            pos[:, 0] += step_len * cos_h
            pos[:, 1] += step_len * sin_h
        else:
            pos[:, 0] += max_step * cos_h
            pos[:, 1] += max_step * sin_h
        self.heading = heading
        self._refresh_pairs()

    # -------------------------------------------------------------- arrivals

    def _arrival_phase(self, warm: bool):
        cfg = self.cfg
        area = classify_points(self.arena, self.pos)
        if not warm and (self.sensing_on or self.locked_loop):
            changed = (area != self.prev_area) & (area != int(AreaKind.OPEN))
            for i in np.nonzero(changed)[0]:
                i = int(i)
                a = AreaKind(int(area[i]))
                mode_i = MotionMode(int(self.mode[i]))
                ev = mo.arrival_check(mode_i, AreaKind(int(self.prev_area[i])), a)
                if ev is None:
                    continue
                if a == AreaKind.NEST:
                    if self.commit[i] == int(Commitment.UNCOMMITTED) and self.sensing_on:
                        self.mode[i] = int(MotionMode.EXPLORE)
                    continue
                # Resource arrival.
                if mode_i == MotionMode.EXPLORE:
                    if not self.sensing_on:
                        continue
                    new = cm.on_discovery(Commitment(int(self.commit[i])), a)
                    self.commit[i] = int(new)
                    self._bump_commit(new, +1)
                    self._log("discovery", i, {"resource": _RES_LABEL[a]})
                    self.mode[i] = int(MotionMode.GOTO_NEST)
                else:
                    # Exploitation-loop turnaround at the resource edge.
                    self.mode[i] = int(MotionMode.GOTO_NEST)
                if self.game_on and cfg.variant == Variant.SPATIAL.value:
                    created = ng.on_enter_resource(
                        self.inventories[i],
                        cfg.variant,
                        lambda: self._register_word(i, _RES_LABEL[a], "enter"),
                    )
                    if created is not None:
                        self.n_empty -= 1
                        self._ref_add(created)
        self.prev_area = area

        # Committed robots turn around at the nest center, not the boundary,
        # which is what brings the two committed streams within talking range.
        if (self.sensing_on or self.locked_loop) and (
            self.n_committed_a + self.n_committed_b
        ):
            nest = self.arena.nest_center
            going_home = (self.mode == int(MotionMode.GOTO_NEST)) & (
                self.commit != int(Commitment.UNCOMMITTED)
            )
            if going_home.any():
                turn_r = max(self.cfg.nest_turn_radius, mo.TARGET_TOL)
                d2n = (self.pos[:, 0] - nest[0]) ** 2 + (self.pos[:, 1] - nest[1]) ** 2
                arrived = going_home & (d2n <= turn_r**2)
                if arrived.any():
                    to_a = arrived & (self.commit == int(Commitment.A))
                    self.mode[to_a] = int(MotionMode.GOTO_A)
                    self.mode[arrived & ~to_a] = int(MotionMode.GOTO_B)

        if self.sensing_on and not warm and self.n_committed_a + self.n_committed_b < self.n:
            # Return-to-nest lottery; drawn only while uncommitted robots exist.
            draws = self.rng.random(self.n)
            switch = (
                (self.mode == int(MotionMode.EXPLORE))
                & (self.commit == int(Commitment.UNCOMMITTED))
                & (draws < cfg.p_return)
            )
            self.mode[switch] = int(MotionMode.GOTO_NEST)

    # --------------------------------------------------------------- beacons

    def _beacon_phase(self):
        params = cm.CommitmentParams(
            self.cfg.p_recruit, self.cfg.p_cross_inhibit, self.cfg.p_abandon
        )
        # A swarm in a uniform commitment state cannot transition on any
        # beacon, so the no-op lotteries are skipped wholesale.
        n_a, n_b = self.n_committed_a, self.n_committed_b
        uniform = (n_a + n_b == 0) or n_a == self.n or n_b == self.n
        if not uniform:
            in_nest = self.prev_area == int(AreaKind.NEST)
            if in_nest.any():
                self._beacon_transitions(params, in_nest)
        if params.p_abandon > 0.0:
            for i in np.nonzero(self.commit != int(Commitment.UNCOMMITTED))[0]:
                i = int(i)
                state = Commitment(int(self.commit[i]))
                tr = cm.on_abandon(state, params, self.rng)
                if tr.kind == "abandonment":
                    self._log("abandonment", i, {"resource": _COMMIT_LABEL[state]})
                    self.commit[i] = int(Commitment.UNCOMMITTED)
                    self._bump_commit(state, -1)
                    self.mode[i] = int(MotionMode.EXPLORE)

    def _beacon_transitions(self, params: cm.CommitmentParams, in_nest: np.ndarray):
        """Each nest-located hearer draws one beacon uniformly among those it
        received this step; the drawn beacon alone drives its transition.

        Selection draws are consumed for all hearers in index order, then
        transition draws for the hearers whose drawn beacon can act.
        """
        within = self._within()
        hearers = np.nonzero(in_nest)[0]
        w_rows = within[hearers]
        n_senders = w_rows.sum(axis=1)
        heard = n_senders > 0
        if not heard.any():
            return
        hearers = hearers[heard]
        w_rows = w_rows[heard]
        n_senders = n_senders[heard]
        pick = (self.rng.random(len(hearers)) * n_senders).astype(np.int64)
        np.minimum(pick, n_senders - 1, out=pick)
        senders = np.argmax(np.cumsum(w_rows, axis=1) > pick[:, None], axis=1)

        snap = self.commit.copy()
        hearer_state = snap[hearers]
        sender_state = snap[senders]
        uncommitted = int(Commitment.UNCOMMITTED)
        recruit = (hearer_state == uncommitted) & (sender_state != uncommitted)
        cross = (
            (hearer_state != uncommitted)
            & (sender_state != uncommitted)
            & (sender_state != hearer_state)
        )
        applicable = np.nonzero(recruit | cross)[0]
        if len(applicable) == 0:
            return
        draws = self.rng.random(len(applicable))
        for u, m in zip(draws, applicable):
            i = int(hearers[m])
            j = int(senders[m])
            if recruit[m]:
                if u < params.p_recruit:
                    new = Commitment(int(sender_state[m]))
                    self.commit[i] = int(new)
                    self._bump_commit(new, +1)
                    self.mode[i] = int(_GOTO_OF_COMMIT[new])
                    self._log(
                        "recruitment", i, {"resource": _COMMIT_LABEL[new], "sender": j}
                    )
            elif u < params.p_cross_inhibit:
                old = Commitment(int(hearer_state[m]))
                self._log(
                    "cross_inhibition", i, {"resource": _COMMIT_LABEL[old], "sender": j}
                )
                self.commit[i] = int(Commitment.UNCOMMITTED)
                self._bump_commit(old, -1)
                self.mode[i] = int(MotionMode.EXPLORE)

    # ------------------------------------------------------------------ game

    def _game_phase(self):
        cfg, script = self.cfg, self.script
        if script is not None and script.speak is not None:
            speakers = [int(i) for i in script.speak.get(self.step, ())]
        else:
            draws = self.rng.random(self.n)
            speakers = [int(i) for i in np.nonzero(draws < cfg.p_speak)[0]]

        utterances: list[tuple[int, int]] = []
        for i in speakers:
            inv = self.inventories[i]
            was_empty = not inv
            pick = script.word_pick.get((self.step, i)) if script else None
            word = ng.choose_utterance(
                inv,
                cfg.variant,
                lambda: self._register_word(i, self._closest_label(i), "speak"),
                self.rng,
                pick,
            )
            if word is None:
                continue
            if was_empty:
                self.n_empty -= 1
                self._ref_add(word)
            utterances.append((i, word))
        if not utterances:
            return

        spoke = {i for i, _ in utterances}
        inboxes: dict[int, list[ng.Utterance]] = {}
        for i, word in utterances:
            if self.pairwise:
                j = int(self.rng.integers(self.n - 1))
                j = j if j < i else j + 1
                receivers = [] if j in spoke else [j]
            else:
                within = self._within()
                receivers = [int(j) for j in np.nonzero(within[i])[0] if int(j) not in spoke]
            self._log("utterance", i, {"word": int(word), "receivers": receivers})
            for j in receivers:
                inboxes.setdefault(j, []).append(ng.Utterance(i, word))

        for j in sorted(inboxes):
            pick = script.hear_pick.get((self.step, j)) if script else None
            out = ng.on_hear(self.inventories[j], inboxes[j], self.rng, pick)
            if out.success:
                for w in out.removed:
                    self._ref_release(w)
            else:
                if out.first_word:
                    self.n_empty -= 1
                self._ref_add(out.word)
            self._log(
                "game",
                j,
                {
                    "speaker": int(out.speaker),
                    "word": int(out.word),
                    "outcome": "success" if out.success else "failure",
                    "first_word": bool(out.first_word),
                },
            )

    def _closest_label(self, i: int) -> str:
        kind = closest_resource(self.arena, tuple(self.pos[i]), self.rng)
        return _RES_LABEL[kind]

    # --------------------------------------------------------------- logging

    def _bump_commit(self, state: Commitment, delta: int) -> None:
        if state == Commitment.A:
            self.n_committed_a += delta
        elif state == Commitment.B:
            self.n_committed_b += delta

    def _commit_counts(self) -> tuple[int, int, int]:
        n_a, n_b = self.n_committed_a, self.n_committed_b
        return self.n - n_a - n_b, n_a, n_b

    def _log_snapshot(self):
        n_u, n_a, n_b = self._commit_counts()
        n_w_a = n_w_b = n_match = n_mismatch = 0
        for i in range(self.n):
            inv = self.inventories[i]
            if not inv:
                continue
            has_a = any(self.word_prov[w] == "A" for w in inv)
            has_b = any(self.word_prov[w] == "B" for w in inv)
            n_w_a += has_a
            n_w_b += has_b
            c = int(self.commit[i])
            if c == int(Commitment.A):
                n_match += has_a
                n_mismatch += has_b
            elif c == int(Commitment.B):
                n_match += has_b
                n_mismatch += has_a
        self._log(
            "snapshot",
            None,
            {
                "n_u": n_u,
                "n_a": n_a,
                "n_b": n_b,
                "n_w_a": int(n_w_a),
                "n_w_b": int(n_w_b),
                "n_w_none": self.n_empty,
                "n_match": int(n_match),
                "n_mismatch": int(n_mismatch),
                "words_a": self.surv["A"],
                "words_b": self.surv["B"],
            },
        )

    def _log_neighborhood(self):
        labels = self.locked_label if self.locked_loop else self.commit
        within = self._within()
        whole = within.sum(axis=1)
        same = labels[:, None] == labels[None, :]
        within_pop = (within & same).sum(axis=1)
        n_a = int(np.count_nonzero(labels == int(Commitment.A)))
        n_b = int(np.count_nonzero(labels == int(Commitment.B)))
        self._log(
            "neighborhood",
            None,
            {
                "n_small": min(n_a, n_b),
                "whole": [int(x) for x in whole],
                "within": [int(x) for x in within_pop],
                "between": [int(x) for x in (whole - within_pop)],
            },
        )


def simulate(cfg: RunConfig, script: Optional[SimScript] = None) -> RunRecord:
    """Run one simulation to convergence or its horizon."""
    return _Engine(cfg, script).run()


# ------------------------------------------------------------------- run io


def write_run(record: RunRecord, out_dir: str | Path) -> Path:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "events.jsonl").write_text(record.events_jsonl())
    (out / "summary.json").write_text(
        json.dumps(record.summary, indent=2, sort_keys=False) + "\n"
    )
    return out


def load_events(run_dir: str | Path) -> list:
    path = Path(run_dir) / "events.jsonl"
    return [json.loads(line) for line in path.read_text().splitlines() if line]


def load_summary(run_dir: str | Path) -> dict:
    return json.loads((Path(run_dir) / "summary.json").read_text())
