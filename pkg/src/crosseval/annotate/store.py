"""Annotation state: batches of quadruple tasks, an append-only judgment
journal, majority labels, and automated-vs-human correlation."""

from __future__ import annotations

import json
import secrets
import threading
import time
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path
from typing import Iterable, Sequence

from ..errors import IncompleteBatch, NoJudgments
from ..prompting import CorrectnessLabel


@dataclass(frozen=True)
class AnnotationTask:
    task_id: str
    batch_id: str
    language: str
    question: str
    ground_truth: str
    llm_answer: str
    automated_reasoning: str
    automated_label: CorrectnessLabel

    def to_record(self) -> dict:
        d = self.__dict__.copy()
        d["automated_label"] = self.automated_label.value
        return d

    @classmethod
    def from_record(cls, d: dict) -> "AnnotationTask":
        d = dict(d)
        d["automated_label"] = CorrectnessLabel(d["automated_label"])
        return cls(**d)


@dataclass(frozen=True)
class Judgment:
    task_id: str
    annotator_id: str
    agrees: bool
    disagreement_reason: str = ""
    corrected_label: CorrectnessLabel | None = None
    submitted_at: str = ""

    def __post_init__(self):
        if not self.agrees:
            if not self.disagreement_reason.strip():
                raise ValueError("disagreement requires a reason")
            if self.corrected_label is None:
                raise ValueError("disagreement requires a corrected label")

    def to_record(self) -> dict:
        d = self.__dict__.copy()
        d["corrected_label"] = (
            self.corrected_label.value if self.corrected_label else None
        )
        return d

    @classmethod
    def from_record(cls, d: dict) -> "Judgment":
        d = dict(d)
        if d.get("corrected_label"):
            d["corrected_label"] = CorrectnessLabel(d["corrected_label"])
        else:
            d["corrected_label"] = None
        return cls(**d)


def majority_label(
    task: AnnotationTask, judgments: Sequence[Judgment]
) -> tuple[CorrectnessLabel, bool]:
    """Plurality vote: agreement counts for the automated label, disagreement
    for its corrected label. Ties break toward the automated label and set
    the tie flag."""
    if not judgments:
        raise NoJudgments(f"task {task.task_id} has no judgments")
    votes: dict[CorrectnessLabel, int] = {}
    for j in judgments:
        label = task.automated_label if j.agrees else j.corrected_label
        votes[label] = votes.get(label, 0) + 1
    top = max(votes.values())
    winners = [label for label, count in votes.items() if count == top]
    if len(winners) == 1:
        return winners[0], False
    if task.automated_label in winners:
        return task.automated_label, True
    # tie among corrected labels only: earliest judgment's label, still flagged
    for j in judgments:
        label = task.automated_label if j.agrees else j.corrected_label
        if label in winners:
            return label, True
    return winners[0], True


def percentage(numerator: int, denominator: int) -> Decimal:
    """Half-up percentage with two decimals, e.g. 49/51 -> 96.08."""
    raw = Decimal(numerator * 100) / Decimal(denominator)
    return raw.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP)


def average_percentages(values: Iterable[Decimal]) -> Decimal:
    """Mean of per-batch percentages (as printed), half-up to two decimals."""
    values = list(values)
    raw = sum(values, Decimal(0)) / Decimal(len(values))
    return raw.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP)


@dataclass
class BatchReport:
    batch_id: str
    correlation: Decimal
    unanimity: Decimal
    majorities: dict[str, tuple[CorrectnessLabel, bool]] = field(default_factory=dict)


class AnnotationStore:
    """In-memory state backed by an append-only JSONL journal; reloading the
    journal reconstructs everything, including superseded judgments."""

    def __init__(self, journal_path: str | Path | None = None):
        self._journal_path = Path(journal_path) if journal_path else None
        self._lock = threading.Lock()
        self.batches: dict[str, list[AnnotationTask]] = {}
        self.tokens: dict[str, dict[str, str]] = {}  # batch -> annotator -> token
        self.journal: list[dict] = []  # every judgment event, in order
        self._next_judgment_id = 1
        if self._journal_path is not None and self._journal_path.exists():
            with self._journal_path.open(encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if line:
                        self._replay(json.loads(line))

    # --- journal -----------------------------------------------------------

    def _append(self, event: dict) -> None:
        self._replay(event)
        if self._journal_path is not None:
            self._journal_path.parent.mkdir(parents=True, exist_ok=True)
            with self._journal_path.open("a", encoding="utf-8") as fh:
                fh.write(json.dumps(event, ensure_ascii=False) + "\n")

    def _replay(self, event: dict) -> None:
        kind = event["type"]
        if kind == "batch":
            self.batches[event["batch_id"]] = [
                AnnotationTask.from_record(t) for t in event["tasks"]
            ]
            self.tokens[event["batch_id"]] = dict(event["tokens"])
        elif kind == "judgment":
            self.journal.append(event)
            self._next_judgment_id = max(self._next_judgment_id, event["id"] + 1)

    def snapshot(self, path: str | Path) -> None:
        """Write current state as one JSON document (periodic convenience)."""
        state = {
            "batches": {
                bid: [t.to_record() for t in tasks] for bid, tasks in self.batches.items()
            },
            "tokens": self.tokens,
            "journal": self.journal,
        }
        Path(path).write_text(
            json.dumps(state, ensure_ascii=False, sort_keys=True), encoding="utf-8"
        )

    # --- batches -----------------------------------------------------------

    def create_batch(
        self,
        batch_id: str,
        tasks: Sequence[AnnotationTask],
        annotators: Sequence[str],
    ) -> dict[str, str]:
        """Register a batch; returns per-annotator bearer tokens."""
        with self._lock:
            if batch_id in self.batches:
                raise ValueError(f"batch {batch_id} already exists")
            tokens = {a: secrets.token_urlsafe(16) for a in annotators}
            self._append(
                {
                    "type": "batch",
                    "batch_id": batch_id,
                    "tasks": [t.to_record() for t in tasks],
                    "tokens": tokens,
                }
            )
            return tokens

    def authenticate(self, batch_id: str, annotator_id: str, token: str) -> bool:
        return self.tokens.get(batch_id, {}).get(annotator_id) == token

    # --- judgments ---------------------------------------------------------

    def active_judgments(self, batch_id: str) -> dict[tuple[str, str], Judgment]:
        """Latest judgment per (task, annotator) for the batch."""
        task_ids = {t.task_id for t in self.batches.get(batch_id, [])}
        active: dict[tuple[str, str], Judgment] = {}
        for event in self.journal:
            j = Judgment.from_record(event["judgment"])
            if j.task_id in task_ids:
                active[(j.task_id, j.annotator_id)] = j
        return active

    def next_task(self, batch_id: str, annotator_id: str) -> AnnotationTask | None:
        """Lowest-indexed task this annotator has not judged; retry-safe."""
        judged = {
            task_id
            for (task_id, annotator), _ in self.active_judgments(batch_id).items()
            if annotator == annotator_id
        }
        for task in self.batches[batch_id]:
            if task.task_id not in judged:
                return task
        return None

    def submit(self, judgment: Judgment) -> tuple[int, int | None]:
        """Append a judgment; returns (id, superseded id or None)."""
        with self._lock:
            superseded = None
            for event in reversed(self.journal):
                prior = event["judgment"]
                if (
                    prior["task_id"] == judgment.task_id
                    and prior["annotator_id"] == judgment.annotator_id
                ):
                    superseded = event["id"]
                    break
            judgment_id = self._next_judgment_id
            record = judgment.to_record()
            if not record["submitted_at"]:
                record["submitted_at"] = time.strftime(
                    "%Y-%m-%dT%H:%M:%SZ", time.gmtime()
                )
            self._append(
                {
                    "type": "judgment",
                    "id": judgment_id,
                    "supersedes": superseded,
                    "judgment": record,
                }
            )
            return judgment_id, superseded

    # --- reporting ---------------------------------------------------------

    def progress(self, batch_id: str) -> dict:
        tasks = self.batches[batch_id]
        active = self.active_judgments(batch_id)
        per_annotator = {}
        for annotator in self.tokens.get(batch_id, {}):
            per_annotator[annotator] = sum(
                1 for (_, a) in active if a == annotator
            )
        return {
            "batch_id": batch_id,
            "total": len(tasks),
            "judged_by_annotator": per_annotator,
        }

    def batch_report(self, batch_id: str) -> BatchReport:
        """Correlation = share of tasks whose majority label matches the
        automated label; unanimity = share where every judgment agrees."""
        tasks = self.batches[batch_id]
        active = self.active_judgments(batch_id)
        by_task: dict[str, list[Judgment]] = {}
        for (task_id, _), judgment in sorted(active.items()):
            by_task.setdefault(task_id, []).append(judgment)

        unjudged = [t.task_id for t in tasks if t.task_id not in by_task]
        if unjudged:
            raise IncompleteBatch(unjudged)

        matching = 0
        unanimous = 0
        majorities: dict[str, tuple[CorrectnessLabel, bool]] = {}
        for task in tasks:
            judgments = by_task[task.task_id]
            label, tied = majority_label(task, judgments)
            majorities[task.task_id] = (label, tied)
            if label == task.automated_label:
                matching += 1
            if all(j.agrees for j in judgments):
                unanimous += 1
        return BatchReport(
            batch_id=batch_id,
            correlation=percentage(matching, len(tasks)),
            unanimity=percentage(unanimous, len(tasks)),
            majorities=majorities,
        )
