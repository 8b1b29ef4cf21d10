"""Uniform gateway to chat-completion LLMs with persistent caching."""

from .cache import CompletionCache
from .client import CompletionRequest, GenerationRecord, LlmClient, TokenBucket
from .filtering import FilterRateRow, default_group, filtering_rate
from .provider import (
    ChatProvider,
    HttpChatProvider,
    MockChatProvider,
    ProviderReply,
)

__all__ = [
    "CompletionCache",
    "CompletionRequest",
    "GenerationRecord",
    "LlmClient",
    "TokenBucket",
    "ChatProvider",
    "HttpChatProvider",
    "MockChatProvider",
    "ProviderReply",
    "FilterRateRow",
    "filtering_rate",
    "default_group",
]
