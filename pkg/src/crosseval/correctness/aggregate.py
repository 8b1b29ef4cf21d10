"""Label aggregation into contingency tables and the stratified sample that
feeds human validation."""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal

from ..errors import MixedDatasets
from ..prompting import CorrectnessLabel
from ..rng import DeterministicRng, derive_seed
from .pipeline import CorrectnessVerdict

LABEL_ORDER = [
    CorrectnessLabel.MORE_COMPREHENSIVE,
    CorrectnessLabel.LESS_COMPREHENSIVE,
    CorrectnessLabel.NEITHER,
    CorrectnessLabel.CONTRADICTORY,
    CorrectnessLabel.NO_RESPONSE,
]


@dataclass
class ContingencyTable:
    dataset: str
    counts: dict[str, dict[CorrectnessLabel, int]] = field(default_factory=dict)

    def count(self, language: str, label: CorrectnessLabel) -> int:
        return self.counts.get(language, {}).get(label, 0)

    def language_total(self, language: str) -> int:
        return sum(self.counts.get(language, {}).values())

    @property
    def languages(self) -> list[str]:
        return list(self.counts)


def aggregate_labels(verdicts: list[CorrectnessVerdict]) -> ContingencyTable:
    """Exact per-language label counts; NO_RESPONSE is always its own row."""
    datasets = {v.dataset for v in verdicts}
    if len(datasets) > 1:
        raise MixedDatasets(f"verdicts span datasets: {sorted(datasets)}")
    table = ContingencyTable(dataset=next(iter(datasets)) if datasets else "")
    for v in verdicts:
        per_lang = table.counts.setdefault(
            v.language, {label: 0 for label in LABEL_ORDER}
        )
        per_lang[v.label] += 1
    return table


@dataclass
class AnnotationBatchSet:
    batches: list[list[CorrectnessVerdict]]
    per_label_sizes: dict[CorrectnessLabel, int]

    @property
    def total(self) -> int:
        return sum(len(b) for b in self.batches)


def _half_up_count(fraction: float, count: int) -> int:
    raw = Decimal(str(fraction)) * count
    return int(raw.quantize(Decimal("1"), rounding=ROUND_HALF_UP))


def stratified_sample(
    verdicts: list[CorrectnessVerdict],
    fraction: float,
    seed: int,
    n_batches: int = 2,
) -> AnnotationBatchSet:
    """Sample round(fraction * count) per label (at least 1 from any nonempty
    label), shuffle deterministically, and split into near-equal batches with
    the earlier batches taking the remainder."""
    if not 0.0 < fraction <= 1.0:
        raise ValueError(f"fraction must be in (0, 1], got {fraction}")
    by_label: dict[CorrectnessLabel, list[CorrectnessVerdict]] = {}
    for v in verdicts:
        by_label.setdefault(v.label, []).append(v)

    sampled: list[CorrectnessVerdict] = []
    sizes: dict[CorrectnessLabel, int] = {}
    for label in LABEL_ORDER:
        pool = by_label.get(label, [])
        if not pool:
            continue
        size = max(1, _half_up_count(fraction, len(pool)))
        size = min(size, len(pool))
        sizes[label] = size
        rng = DeterministicRng(derive_seed(seed, "stratified", label.value))
        picked = rng.sample_without_replacement(len(pool), size)
        sampled.extend(pool[i] for i in picked)

    rng = DeterministicRng(derive_seed(seed, "batch-shuffle"))
    rng.shuffle(sampled)

    base, extra = divmod(len(sampled), n_batches)
    batches = []
    start = 0
    for b in range(n_batches):
        size = base + (1 if b < extra else 0)
        batches.append(sampled[start : start + size])
        start += size
    return AnnotationBatchSet(batches=batches, per_label_sizes=sizes)
