"""Two-sample t-test, pooled variance by default with Welch behind a flag."""

from __future__ import annotations

import math

from ..errors import DegenerateVariance
from .anova import SampleGroup, StatResult
from .special import t_sf_two_sided


def _sample_variance(values: list[float]) -> float:
    m = sum(values) / len(values)
    return sum((x - m) ** 2 for x in values) / (len(values) - 1)


def unpaired_t_test(a: SampleGroup, b: SampleGroup, welch: bool = False) -> StatResult:
    if len(a.values) < 2 or len(b.values) < 2:
        raise ValueError("each group needs at least 2 values")
    n1, n2 = len(a.values), len(b.values)
    m1, m2 = a.mean(), b.mean()
    v1, v2 = _sample_variance(a.values), _sample_variance(b.values)

    if welch:
        se2 = v1 / n1 + v2 / n2
        if se2 == 0.0:
            raise DegenerateVariance("zero variance in both groups")
        df = se2**2 / ((v1 / n1) ** 2 / (n1 - 1) + (v2 / n2) ** 2 / (n2 - 1))
    else:
        pooled = ((n1 - 1) * v1 + (n2 - 1) * v2) / (n1 + n2 - 2)
        if pooled == 0.0:
            raise DegenerateVariance("zero pooled variance")
        se2 = pooled * (1.0 / n1 + 1.0 / n2)
        df = n1 + n2 - 2

    t = (m1 - m2) / math.sqrt(se2)
    return StatResult(statistic=t, p_value=t_sf_two_sided(t, df), df_within=df)
