"""Deterministic table and heatmap exports.

Byte output is a pure function of the inputs: keys are sorted, floats are
rendered through repr, and the manifest hash rides along as a comment line
(CSV), field (JSON), or footer (Markdown).
"""

from __future__ import annotations

import io
import json
from pathlib import Path
from typing import Sequence

from ..correctness import LABEL_ORDER, ContingencyTable
from ..errors import IncompleteRun
from ..prompting import LABEL_DISPLAY, CorrectnessLabel


def export_contingency_csv(
    tables: Sequence[ContingencyTable],
    languages: Sequence[str],
    manifest_hash: str,
    path: str | Path | None = None,
) -> bytes:
    """Label rows x (dataset, language) columns, in the published layout.

    The no-response row is kept explicitly whenever any count is nonzero and
    dropped otherwise, matching the 4-row published shape for runs without
    refusals.
    """
    if not tables:
        raise IncompleteRun(["contingency tables"])
    missing = [
        f"{t.dataset}:{lang}"
        for t in tables
        for lang in languages
        if lang not in t.counts
    ]
    if missing:
        raise IncompleteRun(missing)

    labels = [l for l in LABEL_ORDER if l is not CorrectnessLabel.NO_RESPONSE]
    if any(t.count(lang, CorrectnessLabel.NO_RESPONSE) for t in tables for lang in languages):
        labels.append(CorrectnessLabel.NO_RESPONSE)

    buf = io.StringIO()
    buf.write(f"# manifest: {manifest_hash}\n")
    header = ["label"] + [f"{t.dataset}:{lang}" for t in tables for lang in languages]
    buf.write(",".join(header) + "\n")
    for label in labels:
        row = [LABEL_DISPLAY[label]] + [
            str(t.count(lang, label)) for t in tables for lang in languages
        ]
        buf.write(",".join(row) + "\n")
    data = buf.getvalue().encode("utf-8")
    if path is not None:
        Path(path).write_bytes(data)
    return data


def export_heatmap_json(
    matrix: dict, manifest_hash: str, path: str | Path | None = None
) -> bytes:
    """{"metric", "languages", "taus", "values"} plus the manifest hash."""
    for key in ("metric", "languages", "taus", "values"):
        if key not in matrix:
            raise IncompleteRun([key])
    incomplete = [
        f"values[{i}][{j}]"
        for i, row in enumerate(matrix["values"])
        for j, v in enumerate(row)
        if v is None
    ]
    if incomplete:
        raise IncompleteRun(incomplete)
    payload = dict(matrix)
    payload["manifest"] = manifest_hash
    data = (json.dumps(payload, sort_keys=True, ensure_ascii=False) + "\n").encode("utf-8")
    if path is not None:
        Path(path).write_bytes(data)
    return data


def export_heatmap_csv(
    matrix: dict, manifest_hash: str, path: str | Path | None = None
) -> bytes:
    """Same matrix as the JSON form, rows = temperatures, columns = languages."""
    for key in ("metric", "languages", "taus", "values"):
        if key not in matrix:
            raise IncompleteRun([key])
    buf = io.StringIO()
    buf.write(f"# manifest: {manifest_hash}\n")
    buf.write(f"# metric: {matrix['metric']}\n")
    buf.write(",".join(["tau"] + list(matrix["languages"])) + "\n")
    for tau, row in zip(matrix["taus"], matrix["values"]):
        missing = [f"{matrix['metric']}@tau={tau}" for v in row if v is None]
        if missing:
            raise IncompleteRun(missing)
        buf.write(",".join([str(tau)] + [repr(float(v)) for v in row]) + "\n")
    data = buf.getvalue().encode("utf-8")
    if path is not None:
        Path(path).write_bytes(data)
    return data


def export_rows_csv(
    header: Sequence[str],
    rows: Sequence[Sequence[object]],
    manifest_hash: str,
    path: str | Path | None = None,
) -> bytes:
    buf = io.StringIO()
    buf.write(f"# manifest: {manifest_hash}\n")
    buf.write(",".join(str(h) for h in header) + "\n")
    for row in rows:
        if len(row) != len(header):
            raise IncompleteRun([f"row of width {len(row)} vs header {len(header)}"])
        buf.write(",".join("" if v is None else str(v) for v in row) + "\n")
    data = buf.getvalue().encode("utf-8")
    if path is not None:
        Path(path).write_bytes(data)
    return data


def export_rows_markdown(
    header: Sequence[str],
    rows: Sequence[Sequence[object]],
    manifest_hash: str,
    path: str | Path | None = None,
) -> bytes:
    lines = ["| " + " | ".join(str(h) for h in header) + " |"]
    lines.append("|" + "|".join(" --- " for _ in header) + "|")
    for row in rows:
        if len(row) != len(header):
            raise IncompleteRun([f"row of width {len(row)} vs header {len(header)}"])
        lines.append("| " + " | ".join("" if v is None else str(v) for v in row) + " |")
    lines.append("")
    lines.append(f"manifest: {manifest_hash}")
    data = ("\n".join(lines) + "\n").encode("utf-8")
    if path is not None:
        Path(path).write_bytes(data)
    return data
