"""Cosine similarity between topic distributions."""

from __future__ import annotations

import math
from typing import Sequence

from ..errors import DimensionMismatch


def topic_similarity(t1: Sequence[float], t2: Sequence[float]) -> float:
    """Cosine of two topic simplexes; non-negative entries keep it in [0, 1]."""
    if len(t1) != len(t2):
        raise DimensionMismatch(f"distributions differ in length: {len(t1)} vs {len(t2)}")
    dot = norm1 = norm2 = 0.0
    for x, y in zip(t1, t2):
        dot += x * y
        norm1 += x * x
        norm2 += y * y
    if norm1 == 0.0 or norm2 == 0.0:
        raise DimensionMismatch("zero-mass topic distribution")
    return min(1.0, dot / (math.sqrt(norm1) * math.sqrt(norm2)))
