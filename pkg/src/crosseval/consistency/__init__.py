"""Agreement metrics among sampled answers: surface, semantic, topic, and
language levels."""

from .embeddings import EmbeddingProvider, HashingEmbeddingProvider, HttpEmbeddingProvider
from .language import language_consistency
from .metrics import (
    bertscore,
    clamp01,
    ngram_set,
    ngram_similarity,
    pairwise_mean,
    response_length,
    sentence_similarity,
)
from .pipeline import (
    SCORE_FIELDS,
    AnswerSet,
    ConsistencyScores,
    TopicModelSet,
    collect_answer_sets,
    evaluate_consistency,
    fit_topic_models,
    load_scores_csv,
    save_scores_csv,
    save_scores_jsonl,
    score_answer_set,
)

__all__ = [
    "ngram_similarity",
    "ngram_set",
    "response_length",
    "sentence_similarity",
    "bertscore",
    "pairwise_mean",
    "clamp01",
    "language_consistency",
    "EmbeddingProvider",
    "HashingEmbeddingProvider",
    "HttpEmbeddingProvider",
    "AnswerSet",
    "ConsistencyScores",
    "TopicModelSet",
    "SCORE_FIELDS",
    "collect_answer_sets",
    "fit_topic_models",
    "score_answer_set",
    "evaluate_consistency",
    "save_scores_csv",
    "save_scores_jsonl",
    "load_scores_csv",
]
