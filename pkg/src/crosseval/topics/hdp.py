"""Truncated stick-breaking Gibbs sampler for the hierarchical Dirichlet
process.

Token-topic assignments are resampled with the shared Gibbs kernel against a
document-level prior alpha0 * global_weights; the global stick weights are
then refreshed from Chinese-restaurant table counts drawn per (document,
topic). Realized topics are the truncation slots holding at least one token.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .._kernels import gibbs_sweep, infer_sweep
from ..errors import EmptyCorpus
from ..rng import DeterministicRng, derive_seed
from .lda import _flatten, build_vocabulary

log = logging.getLogger(__name__)

HDP_INFER_SWEEPS = 30


@dataclass
class HdpModel:
    gamma: float
    alpha0: float
    truncation: int
    beta: float
    seed: int
    n_iterations: int
    vocabulary: list[str]
    topic_word_counts: np.ndarray  # int32 [T, V]
    topic_totals: np.ndarray  # int32 [T]
    global_weights: np.ndarray  # float64 [T]
    realized_topics: list[int] = field(default_factory=list)

    @property
    def vocab_index(self) -> dict[str, int]:
        return {w: i for i, w in enumerate(self.vocabulary)}

    @property
    def n_realized(self) -> int:
        return len(self.realized_topics)


def _sample_table_counts(n_dk: np.ndarray, alpha0: float, weights: np.ndarray,
                         rng: DeterministicRng) -> np.ndarray:
    """CRT draw of table counts m_k aggregated over documents."""
    truncation = n_dk.shape[1]
    m = np.zeros(truncation, dtype=np.int64)
    rows, cols = np.nonzero(n_dk)
    counts = n_dk[rows, cols]
    for idx in range(len(rows)):
        k = int(cols[idx])
        concentration = alpha0 * float(weights[k])
        tables = 0
        for i in range(int(counts[idx])):
            if rng.next_double() < concentration / (concentration + i):
                tables += 1
        m[k] += tables
    return m


def _resample_sticks(m: np.ndarray, gamma: float, rng: DeterministicRng) -> np.ndarray:
    """Truncated stick-breaking: v_k ~ Beta(1 + m_k, gamma + sum_{j>k} m_j)."""
    truncation = len(m)
    tail = np.concatenate([np.cumsum(m[::-1])[::-1][1:], [0]])
    weights = np.empty(truncation, dtype=np.float64)
    remaining = 1.0
    for k in range(truncation - 1):
        v = rng.next_beta(1.0 + float(m[k]), gamma + float(tail[k]))
        weights[k] = remaining * v
        remaining *= 1.0 - v
    weights[truncation - 1] = remaining
    return weights


def fit_hdp(
    corpus: list[list[str]],
    gamma: float = 1.0,
    alpha0: float = 1.0,
    truncation: int = 150,
    n_iterations: int = 500,
    seed: int = 0,
    beta: float = 0.01,
) -> HdpModel:
    if not corpus:
        raise EmptyCorpus("cannot fit HDP on an empty corpus")
    if truncation < 2:
        raise ValueError("truncation must be >= 2")
    vocabulary, docs = build_vocabulary(corpus)
    words, doc_ids = _flatten(docs)

    n_docs = len(corpus)
    n_dk = np.zeros((n_docs, truncation), dtype=np.int32)
    n_kw = np.zeros((truncation, len(vocabulary)), dtype=np.int32)
    n_k = np.zeros(truncation, dtype=np.int32)
    z = np.zeros(len(words), dtype=np.int32)

    rng = DeterministicRng(seed)
    init_spread = min(truncation, 8)  # start concentrated so sticks can shrink
    for i in range(len(words)):
        k = min(int(rng.next_double() * init_spread), init_spread - 1)
        z[i] = k
        n_dk[doc_ids[i], k] += 1
        n_kw[k, words[i]] += 1
        n_k[k] += 1
    weights = np.full(truncation, 1.0 / truncation, dtype=np.float64)

    state = rng.state
    for it in range(1, n_iterations + 1):
        prior = alpha0 * weights
        state = gibbs_sweep(words, doc_ids, z, n_dk, n_kw, n_k, prior, beta, state)
        rng.state = state
        m = _sample_table_counts(n_dk, alpha0, weights, rng)
        weights = _resample_sticks(m, gamma, rng)
        state = rng.state
        if it % 100 == 0 or it == n_iterations:
            log.info("hdp iteration %d realized topics %d", it, int((n_k > 0).sum()))

    realized = [int(k) for k in np.nonzero(n_k)[0]]
    return HdpModel(
        gamma=gamma,
        alpha0=alpha0,
        truncation=truncation,
        beta=beta,
        seed=seed,
        n_iterations=n_iterations,
        vocabulary=vocabulary,
        topic_word_counts=n_kw,
        topic_totals=n_k,
        global_weights=weights,
        realized_topics=realized,
    )


def infer_hdp_distribution(model: HdpModel, tokens: list[str]) -> np.ndarray:
    """Distribution over the model's realized topics for one document."""
    import warnings

    vocab = model.vocab_index
    ids = np.asarray([vocab[t] for t in tokens if t in vocab], dtype=np.int32)
    realized = model.realized_topics
    if len(ids) == 0:
        warnings.warn("empty document: returning uniform topic distribution", stacklevel=2)
        return np.full(len(realized), 1.0 / len(realized))

    sub_kw = np.ascontiguousarray(model.topic_word_counts[realized])
    sub_k = np.ascontiguousarray(model.topic_totals[realized])
    prior = np.ascontiguousarray(model.alpha0 * model.global_weights[realized])

    rng = DeterministicRng(derive_seed(model.seed, "hdp-infer", ids.tobytes()))
    n_sub = len(realized)
    z = np.zeros(len(ids), dtype=np.int32)
    n_local = np.zeros(n_sub, dtype=np.int32)
    for i in range(len(ids)):
        k = min(int(rng.next_double() * n_sub), n_sub - 1)
        z[i] = k
        n_local[k] += 1

    state = rng.state
    for _ in range(HDP_INFER_SWEEPS):
        state = infer_sweep(ids, z, n_local, sub_kw, sub_k, prior, model.beta, state)
    theta = (n_local + prior) / (len(ids) + prior.sum())
    return theta / theta.sum()
