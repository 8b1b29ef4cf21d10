"""Classification metrics over binary verification outcomes.

AUC uses the Mann-Whitney pair formulation with ties counting one half,
scored on the binary prediction itself. With binary scores this equals macro
recall (balanced accuracy) exactly; that identity is re-derived in rational
arithmetic on every call as a self-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import EmptyInput
from .judge import VerifiabilityOutcome


@dataclass(frozen=True)
class ClassificationReport:
    tp: int
    fp: int
    tn: int
    fn: int
    p_macro: float
    r_macro: float
    f1_macro: float
    accuracy: float
    auc: float | None  # absent when only one truth class is present

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn


def _safe_div(num: int, den: int) -> Fraction:
    return Fraction(num, den) if den else Fraction(0)


def classification_metrics(outcomes: Sequence[VerifiabilityOutcome]) -> ClassificationReport:
    if not outcomes:
        raise EmptyInput("no outcomes to score")
    tp = sum(1 for o in outcomes if o.truth and o.predicted)
    fn = sum(1 for o in outcomes if o.truth and not o.predicted)
    fp = sum(1 for o in outcomes if not o.truth and o.predicted)
    tn = sum(1 for o in outcomes if not o.truth and not o.predicted)

    precision_pos = _safe_div(tp, tp + fp)
    precision_neg = _safe_div(tn, tn + fn)
    recall_pos = _safe_div(tp, tp + fn)
    recall_neg = _safe_div(tn, tn + fp)
    p_macro = (precision_pos + precision_neg) / 2
    r_macro = (recall_pos + recall_neg) / 2
    f1_macro = (
        2 * p_macro * r_macro / (p_macro + r_macro) if p_macro + r_macro else Fraction(0)
    )
    accuracy = Fraction(tp + tn, len(outcomes))

    n_pos = tp + fn
    n_neg = fp + tn
    auc: Fraction | None = None
    if n_pos and n_neg:
        # pairs (positive, negative): score 1 beats 0; equal scores count 1/2
        wins = Fraction(tp * tn)
        ties = Fraction(tp * fp + fn * tn, 2)
        auc = (wins + ties) / (n_pos * n_neg)
        if auc != r_macro:
            raise RuntimeError(
                "internal cross-check failed: pairwise AUC differs from macro recall"
            )

    return ClassificationReport(
        tp=tp,
        fp=fp,
        tn=tn,
        fn=fn,
        p_macro=float(p_macro),
        r_macro=float(r_macro),
        f1_macro=float(f1_macro),
        accuracy=float(accuracy),
        auc=float(auc) if auc is not None else None,
    )
