"""Derived arithmetic for the published tables.

Two decrease conventions coexist and are exposed separately: the per-dataset
row comparisons divide by the dataset size, while the cross-model comparisons
divide by the English count. Rounding is half-up to the printed precision.
"""

from __future__ import annotations

from decimal import ROUND_HALF_UP, Decimal

from ..errors import ZeroBaseline


def _half_up(value: Decimal, places: str) -> float:
    return float(value.quantize(Decimal(places), rounding=ROUND_HALF_UP))


def relative_decrease(count_lang: int, count_en: int, dataset_size: int) -> float:
    """100 * (count_en - count_lang) / dataset_size, as a 2dp percentage."""
    if dataset_size <= 0:
        raise ValueError("dataset_size must be positive")
    raw = Decimal(100) * (Decimal(count_en) - Decimal(count_lang)) / Decimal(dataset_size)
    return _half_up(raw, "0.01")


def contradiction_multiplier(count_lang: int, count_en: int) -> float:
    """count_lang / count_en to 2 decimals; zero baseline raises."""
    if count_en == 0:
        raise ZeroBaseline("English count is zero")
    return _half_up(Decimal(count_lang) / Decimal(count_en), "0.01")


def render_multiplier(count_lang: int, count_en: int) -> str:
    try:
        return f"{contradiction_multiplier(count_lang, count_en):.2f}"
    except ZeroBaseline:
        return "n/a"


def percent_drop(metric_lang: float, metric_en: float) -> float:
    """Signed 100 * (metric_lang - metric_en) / metric_en, one decimal."""
    if metric_en == 0:
        raise ZeroBaseline("English metric is zero")
    raw = (
        Decimal(100)
        * (Decimal(str(metric_lang)) - Decimal(str(metric_en)))
        / Decimal(str(metric_en))
    )
    return _half_up(raw, "0.1")


def english_baseline_decrease(count_lang: int, count_en: int) -> float:
    """100 * (count_en - count_lang) / count_en, as a 2dp percentage."""
    if count_en == 0:
        raise ZeroBaseline("English count is zero")
    raw = Decimal(100) * (Decimal(count_en) - Decimal(count_lang)) / Decimal(count_en)
    return _half_up(raw, "0.01")
