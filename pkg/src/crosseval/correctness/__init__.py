"""Two-phase correctness protocol: answer generation, comparative grading,
aggregation, and the stratified sample for human validation."""

from .aggregate import (
    LABEL_ORDER,
    AnnotationBatchSet,
    ContingencyTable,
    aggregate_labels,
    stratified_sample,
)
from .pipeline import (
    CorrectnessVerdict,
    Phase1Answer,
    language_display,
    load_verdicts,
    run_correctness,
    run_phase1,
    run_phase2,
    save_verdicts,
)

__all__ = [
    "Phase1Answer",
    "CorrectnessVerdict",
    "run_phase1",
    "run_phase2",
    "run_correctness",
    "save_verdicts",
    "load_verdicts",
    "language_display",
    "ContingencyTable",
    "LABEL_ORDER",
    "aggregate_labels",
    "stratified_sample",
    "AnnotationBatchSet",
]
