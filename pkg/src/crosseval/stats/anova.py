"""One-way ANOVA and post-hoc Tukey HSD (Tukey-Kramer for unequal sizes)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..errors import DegenerateVariance
from .special import f_sf
from .srange import studentized_range_cdf


@dataclass(frozen=True)
class SampleGroup:
    label: str
    values: list[float]

    def mean(self) -> float:
        return sum(self.values) / len(self.values)


@dataclass(frozen=True)
class StatResult:
    statistic: float
    p_value: float
    df_between: float | None = None
    df_within: float | None = None
    degenerate: bool = False


@dataclass(frozen=True)
class PairwiseDecision:
    group_a: str
    group_b: str
    mean_diff: float
    p_adjusted: float
    reject: bool


@dataclass(frozen=True)
class AnovaDecomposition:
    """Sum-of-squares split reused by Tukey so both tests share one MS_within."""

    groups: list[SampleGroup] = field(repr=False)
    ss_between: float
    ss_within: float
    df_between: int
    df_within: int

    @property
    def ms_within(self) -> float:
        return self.ss_within / self.df_within


def _decompose(groups: list[SampleGroup]) -> AnovaDecomposition:
    if len(groups) < 2:
        raise ValueError("need at least 2 groups")
    for g in groups:
        if len(g.values) < 2:
            raise ValueError(f"group '{g.label}' needs at least 2 values")
    n_total = sum(len(g.values) for g in groups)
    grand = sum(sum(g.values) for g in groups) / n_total
    ss_between = sum(len(g.values) * (g.mean() - grand) ** 2 for g in groups)
    ss_within = sum(sum((x - g.mean()) ** 2 for x in g.values) for g in groups)
    return AnovaDecomposition(
        groups=groups,
        ss_between=ss_between,
        ss_within=ss_within,
        df_between=len(groups) - 1,
        df_within=n_total - len(groups),
    )


def one_way_anova(groups: list[SampleGroup], on_degenerate: str = "inf") -> StatResult:
    """F = MS_between / MS_within with p from the F upper tail.

    All-equal within-group values make MS_within zero; per ``on_degenerate``
    this either raises or reports F=inf, p=0 with the degenerate flag set.
    """
    dec = _decompose(groups)
    if dec.ss_within == 0.0:
        if dec.ss_between == 0.0 or on_degenerate == "error":
            raise DegenerateVariance("zero within-group variance")
        return StatResult(
            statistic=math.inf,
            p_value=0.0,
            df_between=dec.df_between,
            df_within=dec.df_within,
            degenerate=True,
        )
    ms_between = dec.ss_between / dec.df_between
    f_stat = ms_between / dec.ms_within
    return StatResult(
        statistic=f_stat,
        p_value=f_sf(f_stat, dec.df_between, dec.df_within),
        df_between=dec.df_between,
        df_within=dec.df_within,
    )


def tukey_hsd(groups: list[SampleGroup], alpha: float = 0.05) -> list[PairwiseDecision]:
    """All-pairs comparisons against the studentized range distribution.

    q = |mean_i - mean_j| / sqrt(MS_within/2 * (1/n_i + 1/n_j)), which reduces
    to the classic balanced statistic and applies the Tukey-Kramer correction
    when group sizes differ.
    """
    dec = _decompose(groups)
    if dec.ss_within == 0.0:
        raise DegenerateVariance("zero within-group variance")
    k = len(groups)
    out: list[PairwiseDecision] = []
    for i in range(k):
        for j in range(i + 1, k):
            a, b = groups[i], groups[j]
            diff = a.mean() - b.mean()
            se = math.sqrt(
                dec.ms_within / 2.0 * (1.0 / len(a.values) + 1.0 / len(b.values))
            )
            q = abs(diff) / se
            p_adj = 1.0 - studentized_range_cdf(q, k, dec.df_within)
            out.append(
                PairwiseDecision(
                    group_a=a.label,
                    group_b=b.label,
                    mean_diff=diff,
                    p_adjusted=p_adj,
                    reject=p_adj < alpha,
                )
            )
    return out
