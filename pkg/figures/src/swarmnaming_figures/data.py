"""CSV loading with fail-fast schema validation."""
from __future__ import annotations

import csv
from pathlib import Path


class SchemaError(ValueError):
    """A required CSV is missing or lacks required columns."""


SCHEMAS = {
    "end_states.csv": [
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
    ],
    "neighborhood.csv": ["n_small", "scope", "k", "probability"],
    "origins.csv": ["t_bin", "committed", "trigger", "rate"],
    "interactions.csv": ["t_bin", "within", "between", "exchanges"],
    "populations.csv": [
        "run_id",
        "seed",
        "variant",
        "p_speak",
        "p_sigma",
        "t",
        "n_u",
        "n_a",
        "n_b",
    ],
}


def load_table(in_dir: str | Path, name: str) -> list[dict]:
    """Read one of the known CSVs, checking existence and columns."""
    path = Path(in_dir) / name
    if not path.exists():
        raise SchemaError(f"{name}: file not found in {in_dir}")
    with path.open() as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        missing = [c for c in SCHEMAS[name] if c not in header]
        if missing:
            raise SchemaError(f"{name}: missing columns {missing}")
        return list(reader)
