"""Surface- and semantic-level agreement metrics between generated answers."""

from __future__ import annotations

import logging
import math
from itertools import combinations
from typing import Callable, Sequence

import numpy as np

from ..errors import EmptyTokens, TooFewAnswers, ZeroVector
from ..textseg import word_count, word_tokens

log = logging.getLogger(__name__)

Tokenizer = Callable[[str], list[str]]


def ngram_set(tokens: Sequence[str], n: int) -> set[tuple[str, ...]]:
    return {tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1)}


def ngram_similarity(a: str, b: str, n: int, tokenizer: Tokenizer = word_tokens) -> float:
    """Jaccard similarity of the two texts' n-gram sets (duplicates collapsed).

    Degenerate inputs are mapped rather than raised: both sets empty -> 1.0,
    exactly one empty -> 0.0, logged either way.
    """
    set_a = ngram_set(tokenizer(a), n)
    set_b = ngram_set(tokenizer(b), n)
    if not set_a and not set_b:
        log.debug("ngram_similarity: both %d-gram sets empty, returning 1.0", n)
        return 1.0
    if not set_a or not set_b:
        log.debug("ngram_similarity: one %d-gram set empty, returning 0.0", n)
        return 0.0
    return len(set_a & set_b) / len(set_a | set_b)


def response_length(a: str) -> int:
    """Word count of the answer, punctuation marks and spaces excluded."""
    return word_count(a)


def sentence_similarity(va: Sequence[float], vb: Sequence[float]) -> float:
    """Cosine between two sentence embeddings; raw value in [-1, 1]."""
    if len(va) != len(vb):
        raise ValueError(f"dimension mismatch: {len(va)} vs {len(vb)}")
    dot = norm_a = norm_b = 0.0
    for x, y in zip(va, vb):
        dot += x * y
        norm_a += x * x
        norm_b += y * y
    if norm_a == 0.0 or norm_b == 0.0:
        raise ZeroVector("cannot take cosine of a zero vector")
    return dot / (math.sqrt(norm_a) * math.sqrt(norm_b))


def bertscore(
    vectors_a: Sequence[Sequence[float]],
    vectors_b: Sequence[Sequence[float]],
) -> tuple[float, float, float]:
    """Greedy-matching token similarity without idf weighting or rescaling.

    Precision averages, over b's tokens, the best cosine against a's tokens;
    recall mirrors it over a's tokens; f1 is their harmonic mean (0 when both
    vanish).
    """
    if len(vectors_a) == 0 or len(vectors_b) == 0:
        raise EmptyTokens("bertscore needs at least one token on each side")
    mat_a = np.asarray(vectors_a, dtype=np.float64)
    mat_b = np.asarray(vectors_b, dtype=np.float64)
    norms_a = np.linalg.norm(mat_a, axis=1, keepdims=True)
    norms_b = np.linalg.norm(mat_b, axis=1, keepdims=True)
    np.divide(mat_a, norms_a, out=mat_a, where=norms_a > 0)
    np.divide(mat_b, norms_b, out=mat_b, where=norms_b > 0)
    cos = mat_a @ mat_b.T
    recall = float(cos.max(axis=1).mean())
    precision = float(cos.max(axis=0).mean())
    if precision + recall == 0.0:
        return precision, recall, 0.0
    f1 = 2.0 * precision * recall / (precision + recall)
    return precision, recall, f1


def pairwise_mean(metric: Callable[[str, str], float], answers: Sequence[str]) -> float:
    """Unweighted mean of the metric over all unordered answer pairs."""
    if len(answers) < 2:
        raise TooFewAnswers(f"need >= 2 answers, have {len(answers)}")
    scores = [metric(a, b) for a, b in combinations(answers, 2)]
    return sum(scores) / len(scores)


def clamp01(x: float) -> float:
    """Clamp aggregated similarities into the shared [0, 1] range."""
    return 0.0 if x < 0.0 else 1.0 if x > 1.0 else x
