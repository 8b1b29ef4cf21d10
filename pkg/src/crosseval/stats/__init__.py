"""Inferential statistics kernel: ANOVA, Tukey HSD, t-test, kappa, and the
distribution functions behind them."""

from .anova import (
    AnovaDecomposition,
    PairwiseDecision,
    SampleGroup,
    StatResult,
    one_way_anova,
    tukey_hsd,
)
from .kappa import cohens_kappa
from .render import format_p_scientific, format_statistic_pair, significance_stars
from .special import betainc, f_cdf, f_sf, normal_cdf, normal_pdf, t_cdf, t_sf_two_sided
from .srange import studentized_range_cdf
from .ttest import unpaired_t_test

__all__ = [
    "AnovaDecomposition",
    "PairwiseDecision",
    "SampleGroup",
    "StatResult",
    "one_way_anova",
    "tukey_hsd",
    "cohens_kappa",
    "unpaired_t_test",
    "studentized_range_cdf",
    "betainc",
    "f_cdf",
    "f_sf",
    "normal_cdf",
    "normal_pdf",
    "t_cdf",
    "t_sf_two_sided",
    "significance_stars",
    "format_statistic_pair",
    "format_p_scientific",
]
