"""Dataset translation through a pluggable provider."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Protocol

import httpx

from .loader import Dataset, QAPair


class TranslationProvider(Protocol):
    def translate(self, text: str, source_lang: str, target_lang: str) -> str: ...


class EchoTranslationProvider:
    """Test double: returns the input text unchanged."""

    def translate(self, text: str, source_lang: str, target_lang: str) -> str:
        return text


class HttpTranslationProvider:
    """POSTs {"text", "source", "target"} to the configured endpoint."""

    def __init__(
        self,
        base_url: str,
        api_key_env: str = "CROSSEVAL_TRANSLATE_API_KEY",
        timeout: float = 60.0,
        transport: httpx.BaseTransport | None = None,
    ):
        headers = {}
        key = os.environ.get(api_key_env, "")
        if key:
            headers["Authorization"] = f"Bearer {key}"
        self._client = httpx.Client(
            base_url=base_url, headers=headers, timeout=timeout, transport=transport
        )

    def translate(self, text: str, source_lang: str, target_lang: str) -> str:
        resp = self._client.post(
            "/translate", json={"text": text, "source": source_lang, "target": target_lang}
        )
        resp.raise_for_status()
        return resp.json()["translation"]


@dataclass
class TranslationResult:
    dataset: Dataset
    failures: list[tuple[str, str]] = field(default_factory=list)  # (id, reason)


def translate_dataset(
    dataset: Dataset, provider: TranslationProvider, target_language: str
) -> TranslationResult:
    """Translate question and answer of every row, rewriting the language tag.

    Rows whose provider call fails are dropped from the output and recorded in
    the failure report; ids map one-to-one for the rows that survive.
    """
    out: list[QAPair] = []
    failures: list[tuple[str, str]] = []
    for pair in dataset:
        if pair.language == target_language:
            raise ValueError(f"row {pair.id} is already in {target_language}")
        try:
            question = provider.translate(pair.question, pair.language, target_language)
            answer = provider.translate(pair.answer, pair.language, target_language)
        except Exception as exc:  # provider failures are per-row, not fatal
            failures.append((pair.id, str(exc)))
            continue
        out.append(
            QAPair(
                id=pair.id,
                dataset=pair.dataset,
                language=target_language,
                question=question,
                answer=answer,
                polarity=pair.polarity,
            )
        )
    return TranslationResult(dataset=Dataset(pairs=out), failures=failures)
