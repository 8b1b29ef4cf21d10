"""Completion client: cache-first, bounded retries, call budget, rate limit."""

from __future__ import annotations

import hashlib
import random
import threading
import time
from dataclasses import dataclass, field, replace

from ..errors import AuthError, BudgetExceeded, ProviderUnavailable
from .cache import CompletionCache
from .provider import ChatProvider, ProviderReply


@dataclass(frozen=True)
class CompletionRequest:
    model: str
    user_prompt: str
    system_prompt: str = ""
    temperature: float = 0.0
    sample_index: int = 0
    max_tokens: int = 1024
    language: str = ""  # annotation only, excluded from the cache key

    def __post_init__(self):
        if not 0.0 <= self.temperature <= 1.0:
            raise ValueError(f"temperature must be in [0, 1], got {self.temperature}")
        if self.sample_index < 0:
            raise ValueError("sample_index must be >= 0")

    @property
    def cache_key(self) -> str:
        payload = "\x1f".join(
            [
                self.model,
                self.system_prompt,
                self.user_prompt,
                f"{self.temperature:.6f}",
                str(self.sample_index),
            ]
        )
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()


@dataclass
class GenerationRecord:
    model: str
    user_prompt: str
    system_prompt: str
    temperature: float
    sample_index: int
    max_tokens: int
    language: str
    text: str
    filtered: bool = False
    refusal_reason: str = ""
    latency_ms: float = 0.0
    created_at: str = ""
    from_cache: bool = False

    def to_dict(self) -> dict:
        d = self.__dict__.copy()
        d.pop("from_cache")
        return d

    @classmethod
    def from_dict(cls, d: dict, from_cache: bool = False) -> "GenerationRecord":
        return cls(**d, from_cache=from_cache)


class TokenBucket:
    """Requests-per-minute limiter shared by all client threads."""

    def __init__(self, requests_per_minute: float | None,
                 clock=time.monotonic, sleep=time.sleep):
        self._rate = (requests_per_minute / 60.0) if requests_per_minute else None
        self._capacity = requests_per_minute or 0
        self._tokens = float(self._capacity)
        self._last = clock()
        self._clock = clock
        self._sleep = sleep
        self._lock = threading.Lock()

    def acquire(self) -> None:
        if self._rate is None:
            return
        while True:
            with self._lock:
                now = self._clock()
                self._tokens = min(self._capacity, self._tokens + (now - self._last) * self._rate)
                self._last = now
                if self._tokens >= 1.0:
                    self._tokens -= 1.0
                    return
                needed = (1.0 - self._tokens) / self._rate
            self._sleep(needed)


class LlmClient:
    """complete() is safe for concurrent callers; cache writes serialize
    through the cache lock and provider concurrency is bounded by the
    rate limiter."""

    BACKOFFS = (1.0, 4.0, 16.0)

    def __init__(
        self,
        provider: ChatProvider,
        cache: CompletionCache | None = None,
        max_calls: int | None = None,
        requests_per_minute: float | None = None,
        sleep=time.sleep,
        jitter: random.Random | None = None,
    ):
        self.provider = provider
        self.cache = cache if cache is not None else CompletionCache(None)
        self.max_calls = max_calls
        self.calls_made = 0
        self._sleep = sleep
        self._jitter = jitter or random.Random()
        self._limiter = TokenBucket(requests_per_minute, sleep=sleep)
        self._count_lock = threading.Lock()

    def _charge_budget(self) -> None:
        with self._count_lock:
            if self.max_calls is not None and self.calls_made >= self.max_calls:
                raise BudgetExceeded(self.max_calls)
            self.calls_made += 1

    def _call_with_retries(self, request: CompletionRequest) -> ProviderReply:
        last_error: Exception | None = None
        for attempt in range(len(self.BACKOFFS) + 1):
            try:
                return self.provider.complete_chat(
                    model=request.model,
                    system_prompt=request.system_prompt,
                    user_prompt=request.user_prompt,
                    temperature=request.temperature,
                    max_tokens=request.max_tokens,
                    sample_index=request.sample_index,
                )
            except AuthError:
                raise
            except ProviderUnavailable as exc:
                last_error = exc
                if attempt < len(self.BACKOFFS):
                    backoff = self.BACKOFFS[attempt] * (1.0 + 0.25 * self._jitter.random())
                    self._sleep(backoff)
        raise ProviderUnavailable(str(last_error))

    def complete(self, request: CompletionRequest) -> GenerationRecord:
        """Cache hit returns the stored record without touching the provider.

        Filtered replies persist as filtered=true records; they are final
        outcomes, never retried as errors.
        """
        key = request.cache_key
        stored = self.cache.get(key)
        if stored is not None:
            return GenerationRecord.from_dict(stored, from_cache=True)

        self._charge_budget()
        self._limiter.acquire()
        start = time.monotonic()
        reply = self._call_with_retries(request)
        latency_ms = (time.monotonic() - start) * 1000.0

        record = GenerationRecord(
            model=request.model,
            user_prompt=request.user_prompt,
            system_prompt=request.system_prompt,
            temperature=request.temperature,
            sample_index=request.sample_index,
            max_tokens=request.max_tokens,
            language=request.language,
            text=reply.text,
            filtered=reply.filtered,
            refusal_reason=reply.refusal_reason,
            latency_ms=latency_ms,
            created_at=time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        )
        self.cache.put(key, record.to_dict())
        return record

    def generate_samples(
        self,
        question_prompt: str,
        model: str,
        temperature: float,
        k_samples: int,
        system_prompt: str = "",
        language: str = "",
        max_tokens: int = 1024,
    ) -> list[GenerationRecord]:
        """K independently cached samples, returned in sample-index order."""
        if k_samples < 2:
            raise ValueError(f"need K >= 2 samples, got {k_samples}")
        base = CompletionRequest(
            model=model,
            user_prompt=question_prompt,
            system_prompt=system_prompt,
            temperature=temperature,
            language=language,
            max_tokens=max_tokens,
        )
        return [
            self.complete(replace(base, sample_index=k)) for k in range(k_samples)
        ]
