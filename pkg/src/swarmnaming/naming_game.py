"""The broadcast naming game: speaker selection, word creation (classic and
spatial variants), hearer inventory updates and word provenance."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional, Sequence

from .config import Variant


@dataclass(frozen=True)
class Word:
    """Immutable token. Provenance is fixed at creation, so the word sets of
    the two resources can never intersect."""

    id: int
    provenance: str  # "A" | "B": closest resource at creation time
    created_at: float  # seconds
    creator: int
    creator_committed: bool
    trigger: str  # "speak" (classic) | "enter" (spatial)


class Utterance(NamedTuple):
    speaker: int
    word: int


class GameOutcome(NamedTuple):
    speaker: int
    word: int
    success: bool
    first_word: bool  # the hearer's inventory was empty before this game
    removed: frozenset  # words deleted from the hearer's inventory


def pick_word(inventory: set[int], rng, pick: Optional[int] = None) -> int:
    """Uniform draw from the inventory; explicit ``pick`` indexes the sorted
    inventory and is used by scripted runs."""
    words = sorted(inventory)
    if pick is None:
        pick = int(rng.integers(len(words))) if len(words) > 1 else 0
    return words[pick]


def choose_utterance(
    inventory: set[int],
    variant: str,
    create_word: Callable[[], int],
    rng,
    pick: Optional[int] = None,
) -> Optional[int]:
    """What a robot says once it has decided to speak.

    Classic speakers with an empty inventory mint a fresh word via
    ``create_word`` (which registers it and returns its id) and broadcast it;
    spatial speakers with nothing to say stay silent.
    """
    if not inventory:
        if variant == Variant.CLASSIC.value:
            word = create_word()
            inventory.add(word)
            return word
        return None
    return pick_word(inventory, rng, pick)


def maybe_speak(
    inventory: set[int],
    variant: str,
    p_speak: float,
    create_word: Callable[[], int],
    rng,
) -> Optional[int]:
    """Full speaker branch: a Bernoulli trial then the utterance choice."""
    if rng.random() >= p_speak:
        return None
    return choose_utterance(inventory, variant, create_word, rng)


def on_enter_resource(inventory: set[int], variant: str, create_word: Callable[[], int]) -> Optional[int]:
    """Spatial-variant word creation when a robot arrives at a resource with
    an empty inventory. No broadcast happens at creation."""
    if variant != Variant.SPATIAL.value or inventory:
        return None
    word = create_word()
    inventory.add(word)
    return word


def on_hear(
    inventory: set[int],
    received: Sequence[Utterance],
    rng,
    pick: Optional[int] = None,
) -> GameOutcome:
    """Play one game: draw a single utterance among those received and either
    collapse the inventory to that word (success) or add it (failure).

    Mutates ``inventory`` and reports removed words so callers can keep
    survival counts incremental.
    """
    if pick is None:
        pick = int(rng.integers(len(received))) if len(received) > 1 else 0
    speaker, word = received[pick]
    if word in inventory:
        removed = frozenset(w for w in inventory if w != word)
        inventory.clear()
        inventory.add(word)
        return GameOutcome(speaker, word, True, False, removed)
    first = not inventory
    inventory.add(word)
    return GameOutcome(speaker, word, False, first, frozenset())


def word_sets(
    inventories: Sequence[set[int]],
    provenance: dict[int, str],
    selected: str,
) -> tuple[set[int], set[int]]:
    """Split surviving words into (matching, non-matching) for the selected
    resource. Undefined when no resource is selected."""
    if selected not in ("A", "B"):
        raise ValueError("word_sets needs a selected resource, not a tie")
    surviving: set[int] = set().union(*inventories) if inventories else set()
    matching = {w for w in surviving if provenance[w] == selected}
    return matching, surviving - matching
