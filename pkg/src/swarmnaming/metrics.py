"""Event-log consumers: population partitions, vocabulary matching, end-state
classification, spread bins, first-word origins, neighborhood histograms and
interaction loads. Everything here replays immutable logs; nothing touches
the engine."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from .commitment import selected_resource

SPREAD_BINS = ("0-10", "10-20", "20-30", "30-40", "40-50")
END_CLASSES = ("OO", "OX", "XO", "XX")


# ---------------------------------------------------------------- word table


def build_word_table(events: list) -> dict[int, dict]:
    """Map word id -> creation record (provenance, time, creator, trigger)."""
    table = {}
    for ev in events:
        if ev["type"] == "word_created":
            p = ev["payload"]
            table[p["word"]] = {
                "provenance": p["provenance"],
                "t": ev["t"],
                "creator": ev["robot"],
                "trigger": p["trigger"],
                "committed": p["committed"],
            }
    return table


# ------------------------------------------------------------ replay helpers


class CommitmentReplay:
    """Walk commitment events in log order, tracking per-robot state and the
    committed counts at any point of the log."""

    def __init__(self, n_robots: int):
        self.state: list[Optional[str]] = [None] * n_robots
        self.n_a = 0
        self.n_b = 0

    def apply(self, ev: dict) -> None:
        etype = ev["type"]
        if etype in ("discovery", "recruitment"):
            self._set(ev["robot"], ev["payload"]["resource"])
        elif etype in ("cross_inhibition", "abandonment"):
            self._set(ev["robot"], None)

    def _set(self, robot: int, resource: Optional[str]) -> None:
        old = self.state[robot]
        if old == "A":
            self.n_a -= 1
        elif old == "B":
            self.n_b -= 1
        self.state[robot] = resource
        if resource == "A":
            self.n_a += 1
        elif resource == "B":
            self.n_b += 1

    def counts(self) -> tuple[int, int]:
        return self.n_a, self.n_b


class InventoryReplay:
    """Re-derive all inventories from creations and games, enforcing the game
    laws along the way. ``violations`` stays empty on a well-formed log."""

    def __init__(self, n_robots: int):
        self.inventories: list[set[int]] = [set() for _ in range(n_robots)]
        self.ref: Counter = Counter()
        self.violations: list[str] = []

    def apply(self, ev: dict) -> None:
        etype = ev["type"]
        if etype == "word_created":
            word = ev["payload"]["word"]
            inv = self.inventories[ev["robot"]]
            if inv:
                self.violations.append(
                    f"t={ev['t']}: robot {ev['robot']} created word {word} "
                    "with a non-empty inventory"
                )
            inv.add(word)
            self.ref[word] += 1
        elif etype == "game":
            p = ev["payload"]
            word = p["word"]
            inv = self.inventories[ev["robot"]]
            before = len(inv)
            if p["outcome"] == "success":
                if word not in inv:
                    self.violations.append(
                        f"t={ev['t']}: success on word {word} absent from "
                        f"robot {ev['robot']}'s inventory"
                    )
                for w in list(inv):
                    if w != word:
                        inv.discard(w)
                        self._release(w)
                if inv != {word}:
                    self.violations.append(
                        f"t={ev['t']}: inventory not collapsed to the heard word"
                    )
            else:
                if word in inv:
                    self.violations.append(
                        f"t={ev['t']}: failure on word {word} already held by "
                        f"robot {ev['robot']}"
                    )
                if p["first_word"] != (before == 0):
                    self.violations.append(
                        f"t={ev['t']}: first_word flag inconsistent for robot "
                        f"{ev['robot']}"
                    )
                inv.add(word)
                self.ref[word] += 1
                if len(inv) != before + 1:
                    self.violations.append(
                        f"t={ev['t']}: failure did not grow the inventory by one"
                    )

    def _release(self, word: int) -> None:
        self.ref[word] -= 1
        if self.ref[word] == 0:
            del self.ref[word]

    def distinct(self) -> int:
        return len(self.ref)

    def n_empty(self) -> int:
        return sum(1 for inv in self.inventories if not inv)


def validate_game_laws(events: list, n_robots: int) -> list[str]:
    """Replay a log and return every game-law violation found (none expected)."""
    replay = InventoryReplay(n_robots)
    for ev in events:
        replay.apply(ev)
    return replay.violations


def check_conservation(events: list, n_robots: int) -> list[str]:
    """Population conservation at every snapshot; returns violations."""
    bad = []
    for ev in events:
        if ev["type"] == "snapshot":
            p = ev["payload"]
            if p["n_u"] + p["n_a"] + p["n_b"] != n_robots:
                bad.append(f"t={ev['t']}: populations sum to "
                           f"{p['n_u'] + p['n_a'] + p['n_b']} != {n_robots}")
    return bad


def surviving_series(events: list, n_robots: int) -> list[tuple[float, int]]:
    """Change points of the distinct-surviving-word count over the run."""
    replay = InventoryReplay(n_robots)
    series: list[tuple[float, int]] = [(0.0, 0)]
    for ev in events:
        if ev["type"] not in ("word_created", "game"):
            continue
        replay.apply(ev)
        count = replay.distinct()
        if count != series[-1][1]:
            series.append((ev["t"], count))
    return series


# ------------------------------------------------------------ end-state math


@dataclass
class EndState:
    status: str  # "classified" | "timeout" | "single_word"
    classes: dict = field(default_factory=dict)  # class label -> weight
    w_f: Optional[int] = None
    w_e: Optional[int] = None
    t_convergence: Optional[float] = None
    t_two_words: Optional[float] = None
    spread_fraction: Optional[float] = None
    spread_bin: Optional[str] = None


def classify_pair(p_f: str, p_e: str, sel_f: str, sel_e: str) -> dict[str, float]:
    """O/X classification of (final word, second-last word) provenances
    against the selected resource at each word's own reference time.

    A tie at a reference time is resolved fractionally; when both times are
    tied, one coin covers both, so same-provenance pairs split OO/XX and
    mixed pairs split OX/XO.
    """
    def label(prov: str, sel: str) -> str:
        return "O" if prov == sel else "X"

    if sel_f != "tie" and sel_e != "tie":
        return {label(p_f, sel_f) + label(p_e, sel_e): 1.0}
    out: dict[str, float] = {}
    for sel in ("A", "B"):
        lf = label(p_f, sel if sel_f == "tie" else sel_f)
        le = label(p_e, sel if sel_e == "tie" else sel_e)
        out[lf + le] = out.get(lf + le, 0.0) + 0.5
    return out


def spread_bin(n_a: int, n_b: int, selected: str) -> Optional[str]:
    """Bin the committed fraction sitting on the non-selected resource.

    Bins are half-open [lo, hi) with the exact 50% split assigned to 40-50.
    Returns None when nobody is committed.
    """
    total = n_a + n_b
    if total == 0:
        return None
    if selected == "tie":
        fraction = 0.5
    else:
        minority = n_b if selected == "A" else n_a
        fraction = minority / total
    idx = min(int(fraction * 10), 4)
    return SPREAD_BINS[idx]


def detect_end_states(events: list, n_robots: int) -> EndState:
    """Classify a run from its event log alone.

    The two-word time is the first moment the surviving-word set has exactly
    two members and never grows past two again before convergence.
    """
    inv = InventoryReplay(n_robots)
    com = CommitmentReplay(n_robots)
    last_above_two = -1
    two_word_points: list[tuple[float, frozenset, tuple[int, int], int]] = []
    converged_at: Optional[float] = None
    w_f: Optional[int] = None
    counts_conv: Optional[tuple[int, int]] = None
    prev_count = 0
    pos = 0
    for ev in events:
        etype = ev["type"]
        if etype in ("discovery", "recruitment", "cross_inhibition", "abandonment"):
            com.apply(ev)
        elif etype in ("word_created", "game"):
            inv.apply(ev)
            count = inv.distinct()
            if count != prev_count:
                if count == 2:
                    two_word_points.append(
                        (ev["t"], frozenset(inv.ref), com.counts(), pos)
                    )
                elif count > 2:
                    last_above_two = pos
                prev_count = count
            if converged_at is None and count == 1 and inv.n_empty() == 0:
                converged_at = ev["t"]
                w_f = next(iter(inv.ref))
                counts_conv = com.counts()
        pos += 1

    if converged_at is None:
        return EndState(status="timeout")

    table = build_word_table(events)
    n_a, n_b = counts_conv
    sel_conv = selected_resource(n_a, n_b)
    sbin = spread_bin(n_a, n_b, sel_conv)
    fraction = None
    if n_a + n_b > 0:
        fraction = 0.5 if sel_conv == "tie" else min(n_a, n_b) / (n_a + n_b)

    qualifying = [p for p in two_word_points if p[3] > last_above_two]
    if not qualifying:
        # The word count never paused at exactly two on its way down.
        return EndState(
            status="single_word",
            t_convergence=converged_at,
            w_f=w_f,
            spread_fraction=fraction,
            spread_bin=sbin,
        )
    t_two, pair, counts_two, _ = qualifying[0]
    w_e = next(iter(pair - {w_f}))
    sel_two = selected_resource(*counts_two)
    classes = classify_pair(
        table[w_f]["provenance"], table[w_e]["provenance"], sel_conv, sel_two
    )
    return EndState(
        status="classified",
        classes=classes,
        w_f=w_f,
        w_e=w_e,
        t_convergence=converged_at,
        t_two_words=t_two,
        spread_fraction=fraction,
        spread_bin=sbin,
    )


# -------------------------------------------------------- first-word origins


def first_word_origins(events: list, n_robots: int) -> list[dict]:
    """One record per robot: when and how its first word arrived.

    Self-created words come from word_created events (speaking with an empty
    inventory or entering a resource with one); received first words come
    from failure games flagged first_word.
    """
    com = CommitmentReplay(n_robots)
    seen: set[int] = set()
    out = []
    for ev in events:
        etype = ev["type"]
        if etype in ("discovery", "recruitment", "cross_inhibition", "abandonment"):
            com.apply(ev)
        elif etype == "word_created":
            robot = ev["robot"]
            if robot not in seen:
                seen.add(robot)
                out.append(
                    {
                        "t": ev["t"],
                        "robot": robot,
                        "committed": bool(ev["payload"]["committed"]),
                        "trigger": "self",
                    }
                )
        elif etype == "game" and ev["payload"]["first_word"]:
            robot = ev["robot"]
            if robot not in seen:
                seen.add(robot)
                out.append(
                    {
                        "t": ev["t"],
                        "robot": robot,
                        "committed": com.state[robot] is not None,
                        "trigger": "received",
                    }
                )
    return out


def origin_series(
    origins: list[dict], bin_s: float, t_max: float
) -> dict[tuple[float, bool, str], int]:
    """Counts per (bin start, committed, trigger)."""
    series: dict[tuple[float, bool, str], int] = {}
    for rec in origins:
        if rec["t"] > t_max:
            continue
        t_bin = int(rec["t"] // bin_s) * bin_s
        key = (float(t_bin), rec["committed"], rec["trigger"])
        series[key] = series.get(key, 0) + 1
    return series


# ---------------------------------------------------------- interaction load


def interaction_tally(events: list, n_robots: int, interval_s: float) -> dict[float, dict]:
    """Per-interval utterance deliveries split within/between the committed
    sub-populations, plus robot exchanges.

    A delivery counts only when speaker and hearer are both committed at
    delivery time. An exchange is a recruitment to a resource different from
    the one the robot held before its last demotion.
    """
    com = CommitmentReplay(n_robots)
    prev_resource: list[Optional[str]] = [None] * n_robots
    bins: dict[float, dict] = {}

    def bin_for(t: float) -> dict:
        start = float(int(t // interval_s) * interval_s)
        return bins.setdefault(start, {"within": 0, "between": 0, "exchanges": 0})

    for ev in events:
        etype = ev["type"]
        if etype == "utterance":
            speaker_c = com.state[ev["robot"]]
            if speaker_c is None:
                continue
            row = bin_for(ev["t"])
            for r in ev["payload"]["receivers"]:
                hearer_c = com.state[r]
                if hearer_c is None:
                    continue
                row["within" if hearer_c == speaker_c else "between"] += 1
        elif etype == "recruitment":
            robot = ev["robot"]
            new = ev["payload"]["resource"]
            if prev_resource[robot] is not None and prev_resource[robot] != new:
                bin_for(ev["t"])["exchanges"] += 1
            com.apply(ev)
        elif etype in ("cross_inhibition", "abandonment"):
            prev_resource[ev["robot"]] = ev["payload"]["resource"]
            com.apply(ev)
        elif etype == "discovery":
            com.apply(ev)
    return bins


# ------------------------------------------------------------- neighborhoods


def neighborhood_counts(events: list) -> Counter:
    """Counter keyed by (n_small, scope, k) over all samples of a log."""
    counts: Counter = Counter()
    for ev in events:
        if ev["type"] != "neighborhood":
            continue
        p = ev["payload"]
        n_small = p["n_small"]
        for scope in ("whole", "within", "between"):
            for k in p[scope]:
                counts[(n_small, scope, k)] += 1
    return counts


def neighborhood_histogram(counts: Counter) -> list[tuple[int, str, int, float]]:
    """Normalize sample counts into P(k | n_small, scope) rows."""
    totals: Counter = Counter()
    for (n_small, scope, _k), c in counts.items():
        totals[(n_small, scope)] += c
    rows = []
    for (n_small, scope, k), c in sorted(counts.items()):
        rows.append((n_small, scope, k, c / totals[(n_small, scope)]))
    return rows


def population_series(events: list) -> list[tuple[float, int, int, int]]:
    """(t, n_u, n_a, n_b) at every snapshot."""
    return [
        (ev["t"], ev["payload"]["n_u"], ev["payload"]["n_a"], ev["payload"]["n_b"])
        for ev in events
        if ev["type"] == "snapshot"
    ]
