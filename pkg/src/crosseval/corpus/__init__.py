"""Benchmark corpus handling: loading, instance construction, translation,
and translation quality scoring."""

from .instances import VerifiabilityInstance, build_verifiability_instances
from .loader import Dataset, Polarity, QAPair, SourceDataset, load_dataset, save_dataset
from .quality import (
    GroupKey,
    TranslationJudgment,
    TranslationQualityReport,
    score_translation_quality,
)
from .translate import (
    EchoTranslationProvider,
    HttpTranslationProvider,
    TranslationProvider,
    TranslationResult,
    translate_dataset,
)

__all__ = [
    "Dataset",
    "QAPair",
    "Polarity",
    "SourceDataset",
    "load_dataset",
    "save_dataset",
    "VerifiabilityInstance",
    "build_verifiability_instances",
    "TranslationProvider",
    "EchoTranslationProvider",
    "HttpTranslationProvider",
    "TranslationResult",
    "translate_dataset",
    "TranslationJudgment",
    "GroupKey",
    "TranslationQualityReport",
    "score_translation_quality",
]
