"""Content-filter rate tables."""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Callable, Hashable, Sequence

from ..errors import EmptyInput
from .client import GenerationRecord


@dataclass(frozen=True)
class FilterRateRow:
    group: tuple
    filtered: int
    total: int

    @property
    def rate_percent(self) -> float:
        """Filtered share as a percentage, half-up to 0.1."""
        raw = Decimal(self.filtered * 100) / Decimal(self.total)
        return float(raw.quantize(Decimal("0.1"), rounding=ROUND_HALF_UP))


def default_group(record: GenerationRecord) -> tuple:
    return (record.model, record.language, record.temperature)


def filtering_rate(
    records: Sequence[GenerationRecord],
    group_by: Callable[[GenerationRecord], Hashable] = default_group,
) -> list[FilterRateRow]:
    """Per-group filtered percentage; group totals sum to the record count."""
    if not records:
        raise EmptyInput("no generation records")
    counts: dict[tuple, list[int]] = {}
    for record in records:
        key = group_by(record)
        if not isinstance(key, tuple):
            key = (key,)
        bucket = counts.setdefault(key, [0, 0])
        bucket[0] += 1 if record.filtered else 0
        bucket[1] += 1
    return [
        FilterRateRow(group=key, filtered=filtered, total=total)
        for key, (filtered, total) in sorted(counts.items())
    ]
