"""Temperature sweep over the verification protocol with a stability summary."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from ..corpus import VerifiabilityInstance
from ..llmgate import LlmClient
from ..parallel import ordered_map
from .judge import VerifiabilityOutcome, judge
from .metrics import ClassificationReport, classification_metrics

METRIC_FIELDS = ("p_macro", "r_macro", "f1_macro", "accuracy", "auc")


@dataclass
class MetricSummary:
    mean: float
    sd: float

    def formatted(self) -> str:
        return f"{self.mean:.4f} ± {self.sd:.4f}"


@dataclass
class VerifiabilityRun:
    language: str
    tau_grid: list[float]
    reports: dict[float, ClassificationReport] = field(default_factory=dict)
    outcomes: dict[float, list[VerifiabilityOutcome]] = field(default_factory=dict)

    def summary(self) -> dict[str, MetricSummary]:
        """Per-metric mean and sample standard deviation across temperatures."""
        out: dict[str, MetricSummary] = {}
        for name in METRIC_FIELDS:
            values = [
                getattr(self.reports[tau], name)
                for tau in self.tau_grid
                if getattr(self.reports[tau], name) is not None
            ]
            if not values:
                continue
            mean = sum(values) / len(values)
            if len(values) > 1:
                sd = math.sqrt(sum((v - mean) ** 2 for v in values) / (len(values) - 1))
            else:
                sd = 0.0
            out[name] = MetricSummary(mean=mean, sd=sd)
        return out


def evaluate_verifiability(
    instances: Sequence[VerifiabilityInstance],
    client: LlmClient,
    model: str,
    language: str,
    tau_grid: Sequence[float],
    max_tokens: int = 256,
    workers: int = 1,
) -> VerifiabilityRun:
    """One classification report per temperature; the judge call itself runs
    at the temperature of the grid point being evaluated."""
    if not tau_grid:
        raise ValueError("tau_grid must not be empty")
    run = VerifiabilityRun(language=language, tau_grid=list(tau_grid))
    for tau in tau_grid:
        outcomes = ordered_map(
            lambda inst: judge(client, inst, model, tau, max_tokens),
            instances,
            workers,
        )
        run.outcomes[tau] = outcomes
        run.reports[tau] = classification_metrics(outcomes)
    return run


def heatmap_matrix(
    runs: dict[str, VerifiabilityRun], metric: str
) -> dict:
    """Metric x language x temperature matrix in the export wire shape."""
    languages = sorted(runs)
    taus = runs[languages[0]].tau_grid if languages else []
    values = []
    for tau in taus:
        row = []
        for lang in languages:
            value = getattr(runs[lang].reports[tau], metric)
            row.append(value)
        values.append(row)
    return {"metric": metric, "languages": languages, "taus": list(taus), "values": values}
