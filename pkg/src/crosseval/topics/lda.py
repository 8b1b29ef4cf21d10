"""LDA fitted by collapsed Gibbs sampling.

The per-token sweep runs in the compiled kernel when available (pure-Python
twin otherwise); initialization, perplexity logging and inference seeding stay
in Python so both backends share them verbatim.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass, field

import numpy as np

from .._kernels import gibbs_sweep, infer_sweep
from ..errors import EmptyCorpus
from ..rng import DeterministicRng, derive_seed

log = logging.getLogger(__name__)

PERPLEXITY_EVERY = 50
INFER_SWEEPS = 30


@dataclass
class LdaModel:
    n_topics: int
    vocabulary: list[str]
    alpha: float
    beta: float
    seed: int
    n_iterations: int
    topic_word_counts: np.ndarray  # int32 [K, V]
    topic_totals: np.ndarray  # int32 [K]
    doc_topic_counts: np.ndarray  # int32 [D, K]
    perplexity_trace: list[tuple[int, float]] = field(default_factory=list)

    @property
    def vocab_index(self) -> dict[str, int]:
        return {w: i for i, w in enumerate(self.vocabulary)}

    def topic_word_distributions(self) -> np.ndarray:
        """Row-normalized topic-word matrix (each row a simplex)."""
        phi = self.topic_word_counts + self.beta
        return phi / phi.sum(axis=1, keepdims=True)


def build_vocabulary(corpus: list[list[str]]) -> tuple[list[str], list[np.ndarray]]:
    """First-appearance-ordered vocabulary plus id-encoded documents."""
    index: dict[str, int] = {}
    docs = []
    for doc in corpus:
        ids = []
        for token in doc:
            if token not in index:
                index[token] = len(index)
            ids.append(index[token])
        docs.append(np.asarray(ids, dtype=np.int32))
    return list(index), docs


def _flatten(docs: list[np.ndarray]) -> tuple[np.ndarray, np.ndarray]:
    words = np.concatenate([d for d in docs if len(d)]) if any(len(d) for d in docs) else np.empty(0, np.int32)
    doc_ids = np.concatenate(
        [np.full(len(d), i, dtype=np.int32) for i, d in enumerate(docs) if len(d)]
    ) if any(len(d) for d in docs) else np.empty(0, np.int32)
    return words.astype(np.int32), doc_ids


def _perplexity(words, doc_ids, n_dk, n_kw, n_k, prior, beta) -> float:
    theta = (n_dk + prior) / (n_dk.sum(axis=1, keepdims=True) + prior.sum())
    phi = (n_kw + beta) / (n_k + n_kw.shape[1] * beta)[:, None]
    token_prob = np.einsum("ik,ki->i", theta[doc_ids], phi[:, words])
    return float(np.exp(-np.log(np.maximum(token_prob, 1e-300)).mean()))


def fit_lda(
    corpus: list[list[str]],
    n_topics: int,
    alpha: float | None = None,
    beta: float = 0.01,
    n_iterations: int = 1000,
    seed: int = 0,
) -> LdaModel:
    """Collapsed Gibbs fit; deterministic for a fixed seed on either backend."""
    if not corpus:
        raise EmptyCorpus("cannot fit LDA on an empty corpus")
    if alpha is None:
        alpha = 50.0 / n_topics
    vocabulary, docs = build_vocabulary(corpus)
    if len(vocabulary) < n_topics:
        warnings.warn(
            f"vocabulary size {len(vocabulary)} is below n_topics {n_topics}",
            stacklevel=2,
        )
    words, doc_ids = _flatten(docs)

    n_docs = len(corpus)
    n_dk = np.zeros((n_docs, n_topics), dtype=np.int32)
    n_kw = np.zeros((n_topics, len(vocabulary)), dtype=np.int32)
    n_k = np.zeros(n_topics, dtype=np.int32)
    z = np.zeros(len(words), dtype=np.int32)
    prior = np.full(n_topics, alpha, dtype=np.float64)

    rng = DeterministicRng(seed)
    for i in range(len(words)):
        k = min(int(rng.next_double() * n_topics), n_topics - 1)
        z[i] = k
        n_dk[doc_ids[i], k] += 1
        n_kw[k, words[i]] += 1
        n_k[k] += 1

    trace: list[tuple[int, float]] = []
    state = rng.state
    for it in range(1, n_iterations + 1):
        state = gibbs_sweep(words, doc_ids, z, n_dk, n_kw, n_k, prior, beta, state)
        if it % PERPLEXITY_EVERY == 0 or it == n_iterations:
            ppl = _perplexity(words, doc_ids, n_dk, n_kw, n_k, prior, beta)
            trace.append((it, ppl))
            log.info("lda n=%d iteration %d perplexity %.3f", n_topics, it, ppl)

    return LdaModel(
        n_topics=n_topics,
        vocabulary=vocabulary,
        alpha=alpha,
        beta=beta,
        seed=seed,
        n_iterations=n_iterations,
        topic_word_counts=n_kw,
        topic_totals=n_k,
        doc_topic_counts=n_dk,
        perplexity_trace=trace,
    )


def infer_lda_distribution(model: LdaModel, tokens: list[str]) -> np.ndarray:
    """Topic simplex for one document against frozen topics.

    Unseen tokens are ignored; an effectively empty document falls back to the
    uniform distribution with a warning. The inference stream is seeded from
    the model seed and the document content, so repeated calls agree exactly.
    """
    vocab = model.vocab_index
    ids = np.asarray([vocab[t] for t in tokens if t in vocab], dtype=np.int32)
    prior = np.full(model.n_topics, model.alpha, dtype=np.float64)
    if len(ids) == 0:
        warnings.warn("empty document: returning uniform topic distribution", stacklevel=2)
        return np.full(model.n_topics, 1.0 / model.n_topics)

    rng = DeterministicRng(derive_seed(model.seed, "lda-infer", ids.tobytes()))
    z = np.zeros(len(ids), dtype=np.int32)
    n_local = np.zeros(model.n_topics, dtype=np.int32)
    for i in range(len(ids)):
        k = min(int(rng.next_double() * model.n_topics), model.n_topics - 1)
        z[i] = k
        n_local[k] += 1

    state = rng.state
    for _ in range(INFER_SWEEPS):
        state = infer_sweep(
            ids, z, n_local, model.topic_word_counts, model.topic_totals, prior,
            model.beta, state,
        )
    theta = (n_local + prior) / (len(ids) + prior.sum())
    return theta / theta.sum()
