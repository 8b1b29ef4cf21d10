"""Translation quality scoring: Likert means per tool and language, plus
average pairwise Cohen's kappa per language."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..errors import NoJudgments
from ..stats import cohens_kappa


@dataclass(frozen=True)
class TranslationJudgment:
    example_id: str
    annotator_id: str
    fluency: int
    meaning: int

    def __post_init__(self):
        for name, value in (("fluency", self.fluency), ("meaning", self.meaning)):
            if not 1 <= value <= 5:
                raise ValueError(f"{name} must be in 1..5, got {value}")


@dataclass(frozen=True)
class GroupKey:
    tool: str
    language: str


@dataclass
class TranslationQualityReport:
    mean_fluency: dict[GroupKey, float] = field(default_factory=dict)
    mean_meaning: dict[GroupKey, float] = field(default_factory=dict)
    kappa: dict[str, float | None] = field(default_factory=dict)  # per language


def score_translation_quality(
    judgments: list[TranslationJudgment],
    grouping: dict[str, GroupKey],
) -> TranslationQualityReport:
    """Arithmetic means per (tool, language); kappa averaged over annotator
    pairs that co-annotated at least one example in the language, computed on
    the raw 5-category scores of both dimensions."""
    if not judgments:
        raise NoJudgments("no judgments to score")
    for j in judgments:
        if j.example_id not in grouping:
            raise KeyError(f"example {j.example_id} missing from grouping")

    by_group: dict[GroupKey, list[TranslationJudgment]] = {}
    for j in judgments:
        by_group.setdefault(grouping[j.example_id], []).append(j)

    report = TranslationQualityReport()
    for key, group in by_group.items():
        report.mean_fluency[key] = sum(j.fluency for j in group) / len(group)
        report.mean_meaning[key] = sum(j.meaning for j in group) / len(group)

    by_language: dict[str, dict[str, dict[str, TranslationJudgment]]] = {}
    for j in judgments:
        lang = grouping[j.example_id].language
        by_language.setdefault(lang, {}).setdefault(j.annotator_id, {})[j.example_id] = j

    for lang, annotators in by_language.items():
        pair_kappas: list[float] = []
        for a1, a2 in combinations(sorted(annotators), 2):
            shared = sorted(set(annotators[a1]) & set(annotators[a2]))
            if not shared:
                continue
            r1 = [annotators[a1][e].fluency for e in shared] + [
                annotators[a1][e].meaning for e in shared
            ]
            r2 = [annotators[a2][e].fluency for e in shared] + [
                annotators[a2][e].meaning for e in shared
            ]
            pair_kappas.append(cohens_kappa(r1, r2))
        report.kappa[lang] = (
            sum(pair_kappas) / len(pair_kappas) if pair_kappas else None
        )
    return report
