"""Derived arithmetic, run manifests, and deterministic exports."""

from .arithmetic import (
    contradiction_multiplier,
    english_baseline_decrease,
    percent_drop,
    relative_decrease,
    render_multiplier,
)
from .export import (
    export_contingency_csv,
    export_heatmap_csv,
    export_heatmap_json,
    export_rows_csv,
    export_rows_markdown,
)
from .manifest import RunManifest, checksum_file

__all__ = [
    "relative_decrease",
    "contradiction_multiplier",
    "render_multiplier",
    "percent_drop",
    "english_baseline_decrease",
    "RunManifest",
    "checksum_file",
    "export_contingency_csv",
    "export_heatmap_csv",
    "export_heatmap_json",
    "export_rows_csv",
    "export_rows_markdown",
]
