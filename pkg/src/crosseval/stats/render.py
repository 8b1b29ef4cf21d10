"""Formatting of test results into the published table conventions."""

from __future__ import annotations


def significance_stars(p: float) -> str:
    """Star legend: *** p<0.001, ** p<0.01, * p<0.05."""
    if p < 0.001:
        return "***"
    if p < 0.01:
        return "**"
    if p < 0.05:
        return "*"
    return ""


def format_p_scientific(p_value: float) -> str:
    """Scientific notation with two fractional digits, e.g. '2.52e-80'."""
    return f"{p_value:.2e}"


def format_statistic_pair(statistic: float, p_value: float) -> str:
    """Render as e.g. '153.47 / 2.52e-80' (statistic 2dp, p scientific)."""
    return f"{statistic:.2f} / {format_p_scientific(p_value)}"
