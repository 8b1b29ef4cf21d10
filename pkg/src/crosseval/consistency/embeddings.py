"""Embedding providers: the abstract client, an HTTP implementation, and a
deterministic hashing double used throughout the test suite."""

from __future__ import annotations

import math
import os
from typing import Protocol

import httpx

from ..errors import ProviderError
from ..rng import DeterministicRng, derive_seed
from ..textseg import word_tokens


class EmbeddingProvider(Protocol):
    dimension: int

    def embed_sentence(self, text: str) -> list[float]: ...

    def embed_tokens(self, text: str) -> tuple[list[str], list[list[float]]]: ...


class HashingEmbeddingProvider:
    """Deterministic pseudo-embeddings: each token hashes to a fixed unit
    vector, sentences are normalized sums. Identical texts always map to
    identical vectors, which is all the harness tests need."""

    def __init__(self, dimension: int = 64):
        self.dimension = dimension
        self._cache: dict[str, list[float]] = {}

    def _token_vector(self, token: str) -> list[float]:
        vec = self._cache.get(token)
        if vec is None:
            rng = DeterministicRng(derive_seed("embed", token))
            vec = [rng.next_normal() for _ in range(self.dimension)]
            norm = math.sqrt(sum(x * x for x in vec))
            vec = [x / norm for x in vec]
            self._cache[token] = vec
        return vec

    def embed_tokens(self, text: str) -> tuple[list[str], list[list[float]]]:
        tokens = word_tokens(text, lowercase=True)
        return tokens, [self._token_vector(t) for t in tokens]

    def embed_sentence(self, text: str) -> list[float]:
        tokens, vectors = self.embed_tokens(text)
        if not tokens:
            return [0.0] * self.dimension
        summed = [sum(col) for col in zip(*vectors)]
        norm = math.sqrt(sum(x * x for x in summed))
        if norm == 0.0:
            return summed
        return [x / norm for x in summed]


class HttpEmbeddingProvider:
    """Text-in, vector-out HTTP client. POSTs {"texts": [...]} to /sentence
    and /tokens endpoints under the configured base URL."""

    def __init__(
        self,
        base_url: str,
        dimension: int,
        api_key_env: str = "CROSSEVAL_EMBED_API_KEY",
        timeout: float = 30.0,
        transport: httpx.BaseTransport | None = None,
    ):
        self.dimension = dimension
        headers = {}
        key = os.environ.get(api_key_env, "")
        if key:
            headers["Authorization"] = f"Bearer {key}"
        self._client = httpx.Client(
            base_url=base_url, headers=headers, timeout=timeout, transport=transport
        )

    def embed_sentence(self, text: str) -> list[float]:
        resp = self._client.post("/sentence", json={"texts": [text]})
        if resp.status_code != 200:
            raise ProviderError(f"embedding service returned {resp.status_code}")
        vec = resp.json()["vectors"][0]
        if len(vec) != self.dimension:
            raise ProviderError(f"expected dimension {self.dimension}, got {len(vec)}")
        return vec

    def embed_tokens(self, text: str) -> tuple[list[str], list[list[float]]]:
        resp = self._client.post("/tokens", json={"texts": [text]})
        if resp.status_code != 200:
            raise ProviderError(f"embedding service returned {resp.status_code}")
        payload = resp.json()
        return payload["tokens"][0], payload["vectors"][0]
