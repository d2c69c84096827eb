"""Figure regeneration for swarmnaming CSV summaries."""

from .charts import FIGURES, build_figure, render
from .data import SchemaError, load_table

__all__ = ["FIGURES", "SchemaError", "build_figure", "load_table", "render"]
