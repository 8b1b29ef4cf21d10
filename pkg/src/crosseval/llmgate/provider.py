"""Chat-completion provider abstraction: HTTP implementation and the canned
mock used by tests and dry runs."""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Protocol

import httpx

from ..errors import AuthError, ProviderUnavailable


@dataclass(frozen=True)
class ProviderReply:
    text: str
    filtered: bool = False
    refusal_reason: str = ""


class ChatProvider(Protocol):
    def complete_chat(
        self,
        model: str,
        system_prompt: str,
        user_prompt: str,
        temperature: float,
        max_tokens: int,
        sample_index: int = 0,
    ) -> ProviderReply: ...


# refusal phrases checked when the provider does not report a filter status
DEFAULT_REFUSAL_PHRASES = (
    "i cannot assist with",
    "i can't assist with",
    "content management policy",
    "content was filtered",
)


class HttpChatProvider:
    """OpenAI-style chat completions endpoint.

    Filter detection: finish_reason == "content_filter" from the provider, or
    a configurable refusal-phrase match on the reply text.
    """

    def __init__(
        self,
        base_url: str,
        api_key_env: str = "CROSSEVAL_LLM_API_KEY",
        refusal_phrases: tuple[str, ...] = DEFAULT_REFUSAL_PHRASES,
        timeout: float = 120.0,
        transport: httpx.BaseTransport | None = None,
    ):
        self._refusal_phrases = tuple(p.lower() for p in refusal_phrases)
        headers = {}
        key = os.environ.get(api_key_env, "")
        if key:
            headers["Authorization"] = f"Bearer {key}"
        self._client = httpx.Client(
            base_url=base_url, headers=headers, timeout=timeout, transport=transport
        )

    def complete_chat(self, model, system_prompt, user_prompt, temperature,
                      max_tokens, sample_index=0) -> ProviderReply:
        messages = []
        if system_prompt:
            messages.append({"role": "system", "content": system_prompt})
        messages.append({"role": "user", "content": user_prompt})
        try:
            resp = self._client.post(
                "/chat/completions",
                json={
                    "model": model,
                    "messages": messages,
                    "temperature": temperature,
                    "max_tokens": max_tokens,
                },
            )
        except httpx.HTTPError as exc:
            raise ProviderUnavailable(str(exc)) from exc
        if resp.status_code in (401, 403):
            raise AuthError(f"provider rejected credentials ({resp.status_code})")
        if resp.status_code >= 500 or resp.status_code == 429:
            raise ProviderUnavailable(f"provider returned {resp.status_code}")
        if resp.status_code != 200:
            raise ProviderUnavailable(
                f"unexpected status {resp.status_code}: {resp.text[:200]}"
            )
        choice = resp.json()["choices"][0]
        if choice.get("finish_reason") == "content_filter":
            return ProviderReply(text="", filtered=True, refusal_reason="content_filter")
        text = (choice.get("message") or {}).get("content") or ""
        lowered = text.lower()
        for phrase in self._refusal_phrases:
            if phrase in lowered:
                return ProviderReply(text="", filtered=True, refusal_reason="refusal_phrase")
        return ProviderReply(text=text)


class MockChatProvider:
    """Serves canned responses from a fixture file (or in-memory rules).

    Fixture format: {"rules": [{"match": "...", "response": "...",
    "filtered": false}, ...]}. The first matching rule wins; "match" is a
    single substring of the user prompt ("*" matches everything) and
    "match_all" is a list of substrings that must all occur. "{k}" and
    "{tau}" in the response are substituted with the sample index and
    temperature, so one rule can emit distinct stochastic samples.
    """

    def __init__(self, fixture_path: str | Path | None = None,
                 rules: list[dict] | None = None):
        if rules is None:
            if fixture_path is None:
                raise ValueError("need fixture_path or rules")
            rules = json.loads(Path(fixture_path).read_text(encoding="utf-8"))["rules"]
        self._rules = rules
        self._lock = threading.Lock()
        self.call_count = 0

    def complete_chat(self, model, system_prompt, user_prompt, temperature,
                      max_tokens, sample_index=0) -> ProviderReply:
        with self._lock:
            self.call_count += 1
        for rule in self._rules:
            if "match_all" in rule:
                hit = all(p in user_prompt for p in rule["match_all"])
            else:
                pattern = rule.get("match", "*")
                hit = pattern == "*" or pattern in user_prompt
            if hit:
                if rule.get("filtered"):
                    return ProviderReply(text="", filtered=True,
                                         refusal_reason=rule.get("reason", "mock_filter"))
                text = rule.get("response", "")
                text = text.replace("{k}", str(sample_index)).replace("{tau}", str(temperature))
                return ProviderReply(text=text)
        return ProviderReply(text="")
