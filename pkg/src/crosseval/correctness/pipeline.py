"""Two-phase comparative grading: generate an answer per question, then ask
the grader to compare it against the expert answer."""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass
from pathlib import Path

from ..corpus import Dataset, QAPair
from ..errors import ProviderError
from ..llmgate import CompletionRequest, LlmClient
from ..parallel import ordered_map
from ..prompting import CorrectnessLabel, TemplateId, parse_correctness_label, render

log = logging.getLogger(__name__)

LANGUAGE_NAMES = {
    "en": "English",
    "es": "Spanish",
    "zh": "Chinese",
    "hi": "Hindi",
}


def language_display(tag: str) -> str:
    return LANGUAGE_NAMES.get(tag, tag)


@dataclass(frozen=True)
class Phase1Answer:
    question_id: str
    language: str
    answer_text: str
    filtered: bool = False
    error: str = ""


@dataclass(frozen=True)
class CorrectnessVerdict:
    question_id: str
    dataset: str
    language: str
    llm_answer: str
    ground_truth: str
    label: CorrectnessLabel
    reasoning: str
    phase1_key: str = ""
    phase2_key: str = ""

    def to_record(self) -> dict:
        d = asdict(self)
        d["label"] = self.label.value
        return d

    @classmethod
    def from_record(cls, d: dict) -> "CorrectnessVerdict":
        d = dict(d)
        d["label"] = CorrectnessLabel(d["label"])
        return cls(**d)


def run_phase1(
    dataset: Dataset,
    client: LlmClient,
    model: str,
    language: str,
    temperature: float = 0.0,
    max_tokens: int = 1024,
    workers: int = 1,
) -> list[Phase1Answer]:
    """One generated answer per question, in input order. Filtered completions
    come back empty with the flag set; provider failures are recorded
    per-question and the run continues."""

    def one(pair: QAPair) -> Phase1Answer:
        prompt = render(
            TemplateId.CORRECTNESS_PHASE1,
            {"LANGUAGE": language_display(language), "QUESTION": pair.question},
        )
        request = CompletionRequest(
            model=model,
            user_prompt=prompt,
            temperature=temperature,
            language=language,
            max_tokens=max_tokens,
        )
        try:
            record = client.complete(request)
        except ProviderError as exc:
            log.warning("phase-1 failed for %s: %s", pair.id, exc)
            return Phase1Answer(pair.id, language, "", error=str(exc))
        return Phase1Answer(pair.id, language, record.text, filtered=record.filtered)

    return ordered_map(one, dataset, workers)


def run_phase2(
    client: LlmClient,
    pair: QAPair,
    llm_answer: str,
    model: str,
    temperature: float = 0.0,
    language: str | None = None,
    max_tokens: int = 1024,
    phase1_key: str = "",
) -> CorrectnessVerdict:
    """Compare the generated answer (Answer 2) against the expert ground
    truth (Answer 1). An empty generated answer short-circuits to NO_RESPONSE
    without any provider call."""
    language = language or pair.language
    if not llm_answer.strip():
        return CorrectnessVerdict(
            question_id=pair.id,
            dataset=pair.dataset,
            language=language,
            llm_answer=llm_answer,
            ground_truth=pair.answer,
            label=CorrectnessLabel.NO_RESPONSE,
            reasoning="",
            phase1_key=phase1_key,
        )
    prompt = render(
        TemplateId.CORRECTNESS_PHASE2,
        {
            "LANGUAGE": language_display(language),
            "QUESTION": pair.question,
            "ANSWER 1": pair.answer,
            "ANSWER 2": llm_answer,
        },
    )
    request = CompletionRequest(
        model=model,
        user_prompt=prompt,
        temperature=temperature,
        language=language,
        max_tokens=max_tokens,
    )
    try:
        record = client.complete(request)
    except ProviderError as exc:
        log.warning("phase-2 failed for %s: %s", pair.id, exc)
        return CorrectnessVerdict(
            question_id=pair.id,
            dataset=pair.dataset,
            language=language,
            llm_answer=llm_answer,
            ground_truth=pair.answer,
            label=CorrectnessLabel.NO_RESPONSE,
            reasoning=f"provider error: {exc}",
            phase1_key=phase1_key,
        )
    if record.filtered:
        label, reasoning = CorrectnessLabel.NO_RESPONSE, "completion filtered"
    else:
        label, reasoning = parse_correctness_label(record.text, language)
    return CorrectnessVerdict(
        question_id=pair.id,
        dataset=pair.dataset,
        language=language,
        llm_answer=llm_answer,
        ground_truth=pair.answer,
        label=label,
        reasoning=reasoning,
        phase1_key=phase1_key,
        phase2_key=request.cache_key,
    )


def run_correctness(
    dataset: Dataset,
    client: LlmClient,
    model: str,
    language: str,
    temperature: float = 0.0,
    grader_model: str | None = None,
    max_tokens: int = 1024,
    workers: int = 1,
) -> list[CorrectnessVerdict]:
    """Full two-phase pipeline over a dataset in the given language."""
    grader_model = grader_model or model
    answers = run_phase1(
        dataset, client, model, language, temperature, max_tokens, workers
    )
    by_id = {p.id: p for p in dataset}

    def grade(answer: Phase1Answer) -> CorrectnessVerdict:
        return run_phase2(
            client,
            by_id[answer.question_id],
            answer.answer_text,
            grader_model,
            temperature,
            language,
            max_tokens,
        )

    return ordered_map(grade, answers, workers)


def save_verdicts(verdicts: list[CorrectnessVerdict], path: str | Path) -> None:
    with Path(path).open("w", encoding="utf-8") as fh:
        for v in verdicts:
            fh.write(json.dumps(v.to_record(), ensure_ascii=False, sort_keys=True) + "\n")


def load_verdicts(path: str | Path) -> list[CorrectnessVerdict]:
    verdicts = []
    with Path(path).open(encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                verdicts.append(CorrectnessVerdict.from_record(json.loads(line)))
    return verdicts
