"""Versioned JSON serialization so fitted topic models are resumable."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .hdp import HdpModel
from .lda import LdaModel

FORMAT_VERSION = 1


def save_model(model: LdaModel | HdpModel, path: str | Path) -> None:
    if isinstance(model, LdaModel):
        payload = {
            "format_version": FORMAT_VERSION,
            "kind": "lda",
            "n_topics": model.n_topics,
            "alpha": model.alpha,
            "beta": model.beta,
            "seed": model.seed,
            "n_iterations": model.n_iterations,
            "vocabulary": model.vocabulary,
            "topic_word_counts": model.topic_word_counts.tolist(),
            "topic_totals": model.topic_totals.tolist(),
            "doc_topic_counts": model.doc_topic_counts.tolist(),
            "perplexity_trace": model.perplexity_trace,
        }
    else:
        payload = {
            "format_version": FORMAT_VERSION,
            "kind": "hdp",
            "gamma": model.gamma,
            "alpha0": model.alpha0,
            "truncation": model.truncation,
            "beta": model.beta,
            "seed": model.seed,
            "n_iterations": model.n_iterations,
            "vocabulary": model.vocabulary,
            "topic_word_counts": model.topic_word_counts.tolist(),
            "topic_totals": model.topic_totals.tolist(),
            "global_weights": model.global_weights.tolist(),
            "realized_topics": model.realized_topics,
        }
    Path(path).write_text(json.dumps(payload), encoding="utf-8")


def load_model(path: str | Path) -> LdaModel | HdpModel:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    version = payload.get("format_version")
    if version != FORMAT_VERSION:
        raise ValueError(f"unsupported model format version: {version}")
    if payload["kind"] == "lda":
        return LdaModel(
            n_topics=payload["n_topics"],
            vocabulary=payload["vocabulary"],
            alpha=payload["alpha"],
            beta=payload["beta"],
            seed=payload["seed"],
            n_iterations=payload["n_iterations"],
            topic_word_counts=np.asarray(payload["topic_word_counts"], dtype=np.int32),
            topic_totals=np.asarray(payload["topic_totals"], dtype=np.int32),
            doc_topic_counts=np.asarray(payload["doc_topic_counts"], dtype=np.int32),
            perplexity_trace=[tuple(t) for t in payload["perplexity_trace"]],
        )
    if payload["kind"] == "hdp":
        return HdpModel(
            gamma=payload["gamma"],
            alpha0=payload["alpha0"],
            truncation=payload["truncation"],
            beta=payload["beta"],
            seed=payload["seed"],
            n_iterations=payload["n_iterations"],
            vocabulary=payload["vocabulary"],
            topic_word_counts=np.asarray(payload["topic_word_counts"], dtype=np.int32),
            topic_totals=np.asarray(payload["topic_totals"], dtype=np.int32),
            global_weights=np.asarray(payload["global_weights"], dtype=np.float64),
            realized_topics=list(payload["realized_topics"]),
        )
    raise ValueError(f"unknown model kind: {payload['kind']}")
