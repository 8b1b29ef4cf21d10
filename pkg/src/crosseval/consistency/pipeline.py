"""Per-question agreement scoring across K sampled answers.

Sampling first collects every answer for the language, topic models are then
fitted once on that complete answer corpus, and only afterwards are the
per-question pairwise metrics computed against the frozen models.
"""

from __future__ import annotations

import csv
import json
import logging
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Sequence

from ..corpus import Dataset, TranslationProvider
from ..errors import ProviderError
from ..langid import LanguageIdentifier
from ..llmgate import LlmClient
from ..parallel import ordered_map
from ..prompting import TemplateId, render
from ..textseg import word_tokens
from ..topics import HdpModel, LdaModel, fit_hdp, fit_lda, infer_topic_distribution, topic_similarity
from .embeddings import EmbeddingProvider
from .language import language_consistency
from .metrics import bertscore, clamp01, ngram_similarity, pairwise_mean, response_length, sentence_similarity

log = logging.getLogger(__name__)

SCORE_FIELDS = (
    "sim_1gram",
    "sim_2gram",
    "length_mean",
    "bertscore_f",
    "sim_sent",
    "sim_lda_20",
    "sim_lda_100",
    "sim_hdp",
    "lang_cons",
)


@dataclass
class AnswerSet:
    question_id: str
    language: str
    temperature: float
    answers: list[str]
    n_filtered: int = 0

    @property
    def k_effective(self) -> int:
        return len(self.answers)


@dataclass
class ConsistencyScores:
    question_id: str
    language: str
    temperature: float
    sim_1gram: float
    sim_2gram: float
    length_mean: float
    bertscore_f: float
    sim_sent: float
    sim_lda_20: float
    sim_lda_100: float
    sim_hdp: float
    lang_cons: float
    raw: dict[str, float] = field(default_factory=dict)

    def to_record(self) -> dict:
        return asdict(self)


@dataclass
class TopicModelSet:
    lda_20: LdaModel
    lda_100: LdaModel
    hdp: HdpModel


def collect_answer_sets(
    dataset: Dataset,
    client: LlmClient,
    model: str,
    language: str,
    temperature: float,
    k_samples: int,
    max_tokens: int = 1024,
    workers: int = 1,
) -> list[AnswerSet]:
    """Sample K answers per question; filtered samples are excluded from the
    answer list with their count noted. Per-question failures are logged and
    the run continues."""

    def one(pair) -> AnswerSet | None:
        prompt = render(TemplateId.CONSISTENCY, {"ANSWER": pair.question})
        try:
            records = client.generate_samples(
                prompt, model, temperature, k_samples,
                language=language, max_tokens=max_tokens,
            )
        except ProviderError as exc:
            log.warning("sampling failed for %s: %s", pair.id, exc)
            return None
        answers = [r.text for r in records if not r.filtered]
        return AnswerSet(
            question_id=pair.id,
            language=language,
            temperature=temperature,
            answers=answers,
            n_filtered=len(records) - len(answers),
        )

    return [s for s in ordered_map(one, dataset, workers) if s is not None]


def fit_topic_models(
    answer_sets: Sequence[AnswerSet],
    seed: int,
    n_iterations: int = 200,
    hdp_truncation: int = 150,
    alpha: float | None = None,
) -> TopicModelSet:
    """Corpus-level models over the complete set of generated answers."""
    corpus = [
        word_tokens(answer, lowercase=True)
        for answer_set in answer_sets
        for answer in answer_set.answers
        if answer.strip()
    ]
    return TopicModelSet(
        lda_20=fit_lda(corpus, 20, alpha=alpha, n_iterations=n_iterations, seed=seed),
        lda_100=fit_lda(corpus, 100, alpha=alpha, n_iterations=n_iterations, seed=seed),
        hdp=fit_hdp(corpus, truncation=hdp_truncation, n_iterations=n_iterations, seed=seed),
    )


def _topic_metric(model, answers: list[str]) -> float:
    distributions = {
        a: infer_topic_distribution(model, word_tokens(a, lowercase=True)) for a in set(answers)
    }
    return pairwise_mean(
        lambda a, b: topic_similarity(distributions[a], distributions[b]), answers
    )


def score_answer_set(
    answer_set: AnswerSet,
    embeddings: EmbeddingProvider,
    topic_models: TopicModelSet,
    identifier: LanguageIdentifier,
    translator: TranslationProvider | None = None,
    back_translate_length: bool = False,
) -> ConsistencyScores:
    """All metrics for one question; similarity fields are clamped to [0, 1]
    at this aggregation step, with raw values kept in the detail dict."""
    answers = answer_set.answers

    sentence_vectors = {a: embeddings.embed_sentence(a) for a in set(answers)}
    token_vectors = {a: embeddings.embed_tokens(a)[1] for a in set(answers)}

    raw_sent = pairwise_mean(
        lambda a, b: sentence_similarity(sentence_vectors[a], sentence_vectors[b]),
        answers,
    )
    raw_bert = pairwise_mean(
        lambda a, b: bertscore(token_vectors[a], token_vectors[b])[2], answers
    )

    length_texts = answers
    if back_translate_length and translator is not None and answer_set.language != "en":
        length_texts = [
            translator.translate(a, answer_set.language, "en") for a in answers
        ]

    scores = ConsistencyScores(
        question_id=answer_set.question_id,
        language=answer_set.language,
        temperature=answer_set.temperature,
        sim_1gram=clamp01(pairwise_mean(lambda a, b: ngram_similarity(a, b, 1), answers)),
        sim_2gram=clamp01(pairwise_mean(lambda a, b: ngram_similarity(a, b, 2), answers)),
        length_mean=sum(response_length(a) for a in length_texts) / len(length_texts),
        bertscore_f=clamp01(raw_bert),
        sim_sent=clamp01(raw_sent),
        sim_lda_20=clamp01(_topic_metric(topic_models.lda_20, answers)),
        sim_lda_100=clamp01(_topic_metric(topic_models.lda_100, answers)),
        sim_hdp=clamp01(_topic_metric(topic_models.hdp, answers)),
        lang_cons=language_consistency(answers, answer_set.language, identifier),
        raw={"sim_sent": raw_sent, "bertscore_f": raw_bert},
    )
    return scores


def evaluate_consistency(
    dataset: Dataset,
    client: LlmClient,
    model: str,
    language: str,
    temperature: float,
    k_samples: int,
    embeddings: EmbeddingProvider,
    identifier: LanguageIdentifier,
    seed: int = 0,
    topic_iterations: int = 200,
    translator: TranslationProvider | None = None,
    back_translate_length: bool = False,
    max_tokens: int = 1024,
    workers: int = 1,
) -> list[ConsistencyScores]:
    answer_sets = collect_answer_sets(
        dataset, client, model, language, temperature, k_samples, max_tokens, workers
    )
    scorable = [s for s in answer_sets if s.k_effective >= 2]
    if len(scorable) < len(answer_sets):
        log.warning(
            "%d question(s) skipped: fewer than 2 unfiltered answers",
            len(answer_sets) - len(scorable),
        )
    if not scorable:
        return []
    topic_models = fit_topic_models(scorable, seed=seed, n_iterations=topic_iterations)
    out = []
    for answer_set in scorable:
        try:
            out.append(
                score_answer_set(
                    answer_set, embeddings, topic_models, identifier,
                    translator, back_translate_length,
                )
            )
        except Exception as exc:
            log.warning("scoring failed for %s: %s", answer_set.question_id, exc)
    return out


def save_scores_csv(scores: list[ConsistencyScores], path: str | Path) -> None:
    with Path(path).open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["question_id", "language", "temperature", *SCORE_FIELDS])
        for s in scores:
            writer.writerow(
                [s.question_id, s.language, s.temperature]
                + [getattr(s, name) for name in SCORE_FIELDS]
            )


def save_scores_jsonl(scores: list[ConsistencyScores], path: str | Path) -> None:
    with Path(path).open("w", encoding="utf-8") as fh:
        for s in scores:
            fh.write(json.dumps(s.to_record(), ensure_ascii=False, sort_keys=True) + "\n")


def load_scores_csv(path: str | Path) -> list[ConsistencyScores]:
    out = []
    with Path(path).open(encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            out.append(
                ConsistencyScores(
                    question_id=row["question_id"],
                    language=row["language"],
                    temperature=float(row["temperature"]),
                    **{name: float(row[name]) for name in SCORE_FIELDS},
                )
            )
    return out
