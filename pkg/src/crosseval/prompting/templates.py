"""Prompt templates and single-pass placeholder substitution."""

from __future__ import annotations

import enum
import re
from pathlib import Path

from ..errors import UnboundPlaceholder


class TemplateId(enum.Enum):
    CORRECTNESS_PHASE1 = "CorrectnessPhase1"
    CORRECTNESS_PHASE2 = "CorrectnessPhase2"
    CONSISTENCY = "Consistency"
    VERIFIABILITY = "Verifiability"


_PHASE1 = """\
You are an expert in medicine, health, and pharmaceutics. Please answer this health- and medical-related queries in [LANGUAGE]. Your answers should be in one or more paragraphs without listing points/lists.
Question: [QUESTION]"""

_PHASE2 = """\
Given below is the question and two answers written in [LANGUAGE] for the question.
Question: [QUESTION]
Answer 1: [ANSWER 1]
Answer 2: [ANSWER 2]

Compare Answer 2 with Answer 1 on the basis of answer similarity, comprehensiveness and appropriateness.
Answer 2 contradicts Answer 1 if Answer 2 provides any information that contradicts the information provided in Answer 1 and Answer 2 incorrectly answers the Question.
Answer 2 is neither contradictory nor similar if Answer 2 answers the Question but Answer 1 and Answer 2 are dissimilar.
First, evaluate whether Answer 2 provides similar information, contradictory information as compared to Answer 1. Support the evaluation with a reasoning. Only if both answers are similar, evaluate the comprehensiveness and appropriateness of Answer 2 in comparison to Answer 1 and provide a reasoning for it.
Finally, based on the previous evaluation, choose one option from the following option:

1) Answer 2 provides neither contradictory nor similar information in comparison to Answer 1
2) Answer 2 provides contradictory information compared to Answer 1
3) Answer 2 provides more comprehensive and appropriate information.
4) Answer 2 provides less comprehensive and appropriate information

Your answer should first provide all reasoning followed by the chosen option string in the last line. The chosen option string should be an exact match with one of the given options."""

_CONSISTENCY = """\
You are an expert in medicine, health, and pharmaceutics. Please answer the following medical question or give your medical diagnosis based on the following scenario.
Answer: [ANSWER]"""

_VERIFIABILITY = """\
You are an expert in medicine, health, and pharmaceuticals. Respond to me whether the following response is a correct answer (or diagnosis) to the following question (or scenario).
Question: [QUESTION]
Answer: [ANSWER]"""

_BODIES: dict[TemplateId, str] = {
    TemplateId.CORRECTNESS_PHASE1: _PHASE1,
    TemplateId.CORRECTNESS_PHASE2: _PHASE2,
    TemplateId.CONSISTENCY: _CONSISTENCY,
    TemplateId.VERIFIABILITY: _VERIFIABILITY,
}

# longest placeholders first so [ANSWER 1] never half-matches as [ANSWER]
_PLACEHOLDER_RE = re.compile(r"(\[ANSWER 1\]|\[ANSWER 2\]|\[LANGUAGE\]|\[QUESTION\]|\[ANSWER\])")

_custom_bodies: dict[TemplateId, str] = {}


def template_body(template_id: TemplateId) -> str:
    return _custom_bodies.get(template_id, _BODIES[template_id])


def load_template(template_id: TemplateId, path: str | Path) -> None:
    """Override a built-in body with a UTF-8 template file."""
    _custom_bodies[template_id] = Path(path).read_text(encoding="utf-8")


def placeholders(template_id: TemplateId) -> list[str]:
    found = _PLACEHOLDER_RE.findall(template_body(template_id))
    seen: dict[str, None] = {}
    for ph in found:
        seen.setdefault(ph[1:-1], None)
    return list(seen)


def render(template_id: TemplateId, bindings: dict[str, str]) -> str:
    """Literal single-pass substitution: placeholder text inside a bound value
    comes through verbatim and is never re-substituted."""
    parts = _PLACEHOLDER_RE.split(template_body(template_id))
    out: list[str] = []
    for part in parts:
        match = _PLACEHOLDER_RE.fullmatch(part)
        if match:
            name = part[1:-1]
            if name not in bindings:
                raise UnboundPlaceholder(name)
            out.append(bindings[name])
        else:
            out.append(part)
    return "".join(out)
