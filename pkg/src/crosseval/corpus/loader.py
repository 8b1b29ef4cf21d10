"""Q&A dataset model and JSONL/CSV loading.

Wire format: one record per row with keys/columns
{id, dataset, language, question, answer, polarity}; polarity may be omitted
and defaults to unlabeled.
"""

from __future__ import annotations

import csv
import enum
import json
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import DuplicateId, EmptyText, MissingField


class Polarity(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    UNLABELED = "unlabeled"


class SourceDataset(enum.Enum):
    HEALTH_QA = "HealthQA"
    LIVE_QA = "LiveQA"
    MEDICATION_QA = "MedicationQA"
    CUSTOM = "Custom"


@dataclass(frozen=True)
class QAPair:
    id: str
    dataset: str
    language: str
    question: str
    answer: str
    polarity: Polarity = Polarity.UNLABELED

    def to_record(self) -> dict:
        return {
            "id": self.id,
            "dataset": self.dataset,
            "language": self.language,
            "question": self.question,
            "answer": self.answer,
            "polarity": self.polarity.value,
        }


@dataclass
class Dataset:
    pairs: list[QAPair] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __getitem__(self, i):
        return self.pairs[i]

    @property
    def languages(self) -> list[str]:
        seen: dict[str, None] = {}
        for p in self.pairs:
            seen.setdefault(p.language, None)
        return list(seen)


_REQUIRED = ("id", "dataset", "language", "question", "answer")


def _pair_from_record(record: dict, row: int, seen_ids: set[tuple[str, str]]) -> QAPair:
    for key in _REQUIRED:
        if key not in record or record[key] is None:
            raise MissingField(row, key)
    question = str(record["question"])
    answer = str(record["answer"])
    if not question.strip():
        raise EmptyText(row, "question")
    if not answer.strip():
        raise EmptyText(row, "answer")
    pair = QAPair(
        id=str(record["id"]),
        dataset=str(record["dataset"]),
        language=str(record["language"]),
        question=question,
        answer=answer,
        polarity=Polarity(str(record.get("polarity") or "unlabeled").lower()),
    )
    key = (pair.id, pair.language)
    if key in seen_ids:
        raise DuplicateId(pair.id)
    seen_ids.add(key)
    return pair


def load_dataset(path: str | Path, format: str | None = None) -> Dataset:
    """Load all rows in input order; counts are up to the caller to report."""
    path = Path(path)
    if format is None:
        format = "csv" if path.suffix.lower() == ".csv" else "jsonl"
    seen: set[tuple[str, str]] = set()
    pairs: list[QAPair] = []
    if format == "jsonl":
        with path.open(encoding="utf-8") as fh:
            for row, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                pairs.append(_pair_from_record(json.loads(line), row, seen))
    elif format == "csv":
        with path.open(encoding="utf-8", newline="") as fh:
            reader = csv.DictReader(fh)
            for row, record in enumerate(reader, start=1):
                pairs.append(_pair_from_record(record, row, seen))
    else:
        raise ValueError(f"unknown dataset format: {format}")
    return Dataset(pairs=pairs)


def save_dataset(dataset: Dataset, path: str | Path, format: str | None = None) -> None:
    """Inverse of load_dataset; round-trips field-for-field."""
    path = Path(path)
    if format is None:
        format = "csv" if path.suffix.lower() == ".csv" else "jsonl"
    if format == "jsonl":
        with path.open("w", encoding="utf-8") as fh:
            for pair in dataset:
                fh.write(json.dumps(pair.to_record(), ensure_ascii=False) + "\n")
    elif format == "csv":
        with path.open("w", encoding="utf-8", newline="") as fh:
            writer = csv.DictWriter(
                fh, fieldnames=["id", "dataset", "language", "question", "answer", "polarity"]
            )
            writer.writeheader()
            for pair in dataset:
                writer.writerow(pair.to_record())
    else:
        raise ValueError(f"unknown dataset format: {format}")
