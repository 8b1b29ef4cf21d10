"""Binary claim-authentication protocol and its classification metrics."""

from .judge import VerifiabilityOutcome, judge
from .metrics import ClassificationReport, classification_metrics
from .pipeline import (
    METRIC_FIELDS,
    MetricSummary,
    VerifiabilityRun,
    evaluate_verifiability,
    heatmap_matrix,
)

__all__ = [
    "VerifiabilityOutcome",
    "judge",
    "ClassificationReport",
    "classification_metrics",
    "VerifiabilityRun",
    "MetricSummary",
    "METRIC_FIELDS",
    "evaluate_verifiability",
    "heatmap_matrix",
]
