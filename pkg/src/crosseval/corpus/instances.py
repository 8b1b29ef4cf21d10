"""Construction of claim-authentication instances.

Each question yields one positive (question, ground-truth answer) pair plus
negatives. Datasets that ship labeled incorrect answers (multiple rows per
question with polarity set) use them as-is; otherwise negatives are sampled
uniformly without replacement from the other questions' answers, never the
question's own.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InsufficientAnswers
from ..rng import DeterministicRng, derive_seed
from .loader import Dataset, Polarity, QAPair


@dataclass(frozen=True)
class VerifiabilityInstance:
    question_id: str
    dataset: str
    language: str
    question: str
    answer: str
    positive: bool


def _has_explicit_negatives(dataset: Dataset) -> bool:
    return any(p.polarity is Polarity.NEGATIVE for p in dataset)


def build_verifiability_instances(
    dataset: Dataset, negatives_per_question: int = 4, seed: int = 0
) -> list[VerifiabilityInstance]:
    """Deterministic instance list in dataset order.

    With explicit polarity labels the provided negatives are used and sampling
    is skipped entirely.
    """
    if _has_explicit_negatives(dataset):
        return [
            VerifiabilityInstance(
                question_id=p.id,
                dataset=p.dataset,
                language=p.language,
                question=p.question,
                answer=p.answer,
                positive=p.polarity is not Polarity.NEGATIVE,
            )
            for p in dataset
        ]

    instances: list[VerifiabilityInstance] = []
    pairs: list[QAPair] = list(dataset)
    distinct_answers: dict[str, None] = {}
    for p in pairs:
        distinct_answers.setdefault(p.answer.strip(), None)
    pool = list(distinct_answers)

    for p in pairs:
        own = p.answer.strip()
        candidates = [a for a in pool if a != own]
        if len(candidates) < negatives_per_question:
            raise InsufficientAnswers(negatives_per_question, len(candidates))
        instances.append(
            VerifiabilityInstance(
                question_id=p.id,
                dataset=p.dataset,
                language=p.language,
                question=p.question,
                answer=p.answer,
                positive=True,
            )
        )
        rng = DeterministicRng(derive_seed(seed, "negatives", p.id, p.language))
        for idx in rng.sample_without_replacement(len(candidates), negatives_per_question):
            instances.append(
                VerifiabilityInstance(
                    question_id=p.id,
                    dataset=p.dataset,
                    language=p.language,
                    question=p.question,
                    answer=candidates[idx],
                    positive=False,
                )
            )
    return instances
