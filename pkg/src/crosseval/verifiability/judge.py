"""Claim-authentication judging: one binary verdict per instance."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ..corpus import VerifiabilityInstance
from ..errors import ProviderError
from ..llmgate import CompletionRequest, LlmClient
from ..prompting import (
    TemplateId,
    VerdictParse,
    parse_verifiability_verdict,
    render,
    verdict_to_prediction,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class VerifiabilityOutcome:
    question_id: str
    language: str
    temperature: float
    predicted: bool
    truth: bool
    indeterminate: bool = False
    record_key: str = ""
    note: str = ""


def judge(
    client: LlmClient,
    instance: VerifiabilityInstance,
    model: str,
    temperature: float,
    max_tokens: int = 256,
) -> VerifiabilityOutcome:
    """Render the verification prompt, complete, parse. Filtered completions
    and provider failures become indeterminate outcomes (predicted negative)."""
    prompt = render(
        TemplateId.VERIFIABILITY,
        {"QUESTION": instance.question, "ANSWER": instance.answer},
    )
    request = CompletionRequest(
        model=model,
        user_prompt=prompt,
        temperature=temperature,
        language=instance.language,
        max_tokens=max_tokens,
    )
    try:
        record = client.complete(request)
    except ProviderError as exc:
        log.warning("judge failed for %s: %s", instance.question_id, exc)
        return VerifiabilityOutcome(
            question_id=instance.question_id,
            language=instance.language,
            temperature=temperature,
            predicted=False,
            truth=instance.positive,
            indeterminate=True,
            note=f"provider error: {exc}",
        )
    if record.filtered:
        return VerifiabilityOutcome(
            question_id=instance.question_id,
            language=instance.language,
            temperature=temperature,
            predicted=False,
            truth=instance.positive,
            indeterminate=True,
            record_key=request.cache_key,
            note="completion filtered",
        )
    parse, note = parse_verifiability_verdict(record.text, instance.language)
    return VerifiabilityOutcome(
        question_id=instance.question_id,
        language=instance.language,
        temperature=temperature,
        predicted=verdict_to_prediction(parse),
        truth=instance.positive,
        indeterminate=parse is VerdictParse.INDETERMINATE,
        record_key=request.cache_key,
        note=note,
    )
