"""Cohen's kappa for two raters over categorical labels."""

from __future__ import annotations

import warnings
from collections import Counter
from typing import Hashable, Sequence

from ..errors import LengthMismatch


def cohens_kappa(r1: Sequence[Hashable], r2: Sequence[Hashable]) -> float:
    """kappa = (p_o - p_e) / (1 - p_e) over the raters' marginal frequencies.

    Degenerate chance agreement (p_e = 1, i.e. both raters constant) maps to
    1.0 under perfect observed agreement and 0.0 otherwise, with a warning.
    """
    if len(r1) != len(r2):
        raise LengthMismatch(f"rating lists differ in length: {len(r1)} vs {len(r2)}")
    if not r1:
        raise LengthMismatch("rating lists are empty")
    n = len(r1)
    p_o = sum(1 for x, y in zip(r1, r2) if x == y) / n
    freq1 = Counter(r1)
    freq2 = Counter(r2)
    p_e = sum(freq1[label] / n * freq2.get(label, 0) / n for label in freq1)
    if p_e >= 1.0:
        warnings.warn("chance agreement is 1; kappa degenerate", stacklevel=2)
        return 1.0 if p_o == 1.0 else 0.0
    return (p_o - p_e) / (1.0 - p_e)
