"""Human-validation subsystem: task store, majority labels, correlation, and
the HTTP service."""

from .service import create_app
from .store import (
    AnnotationStore,
    AnnotationTask,
    BatchReport,
    Judgment,
    average_percentages,
    majority_label,
    percentage,
)

__all__ = [
    "AnnotationTask",
    "Judgment",
    "AnnotationStore",
    "BatchReport",
    "majority_label",
    "percentage",
    "average_percentages",
    "create_app",
]
