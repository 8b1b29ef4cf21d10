"""Four-way comparison labels and their extraction from free-text output.

Canonical option strings exist per language. The English set is the one
issued in prompts; the Spanish/Chinese/Hindi renderings are harness-provided
defaults and can be replaced via a JSON config table.
"""

from __future__ import annotations

import enum
import json
import re
from pathlib import Path


class CorrectnessLabel(enum.Enum):
    NEITHER = "neither_contradictory_nor_similar"
    CONTRADICTORY = "contradictory"
    MORE_COMPREHENSIVE = "more_comprehensive_appropriate"
    LESS_COMPREHENSIVE = "less_comprehensive_appropriate"
    NO_RESPONSE = "no_response"


# display names matching the published contingency-table rows
LABEL_DISPLAY = {
    CorrectnessLabel.MORE_COMPREHENSIVE: "More comprehensive and appropriate",
    CorrectnessLabel.LESS_COMPREHENSIVE: "Less comprehensive and appropriate",
    CorrectnessLabel.NEITHER: "Neither contradictory nor similar",
    CorrectnessLabel.CONTRADICTORY: "Contradictory",
    CorrectnessLabel.NO_RESPONSE: "No Response",
}

_OPTION_STRINGS: dict[str, dict[CorrectnessLabel, str]] = {
    "en": {
        CorrectnessLabel.NEITHER: (
            "Answer 2 provides neither contradictory nor similar information "
            "in comparison to Answer 1"
        ),
        CorrectnessLabel.CONTRADICTORY: (
            "Answer 2 provides contradictory information compared to Answer 1"
        ),
        CorrectnessLabel.MORE_COMPREHENSIVE: (
            "Answer 2 provides more comprehensive and appropriate information."
        ),
        CorrectnessLabel.LESS_COMPREHENSIVE: (
            "Answer 2 provides less comprehensive and appropriate information"
        ),
    },
    "es": {
        CorrectnessLabel.NEITHER: (
            "La Respuesta 2 no proporciona información ni contradictoria ni "
            "similar en comparación con la Respuesta 1"
        ),
        CorrectnessLabel.CONTRADICTORY: (
            "La Respuesta 2 proporciona información contradictoria en "
            "comparación con la Respuesta 1"
        ),
        CorrectnessLabel.MORE_COMPREHENSIVE: (
            "La Respuesta 2 proporciona información más completa y apropiada."
        ),
        CorrectnessLabel.LESS_COMPREHENSIVE: (
            "La Respuesta 2 proporciona información menos completa y apropiada"
        ),
    },
    "zh": {
        CorrectnessLabel.NEITHER: "答案2与答案1相比既不矛盾也不相似",
        CorrectnessLabel.CONTRADICTORY: "答案2提供了与答案1相矛盾的信息",
        CorrectnessLabel.MORE_COMPREHENSIVE: "答案2提供了更全面和恰当的信息。",
        CorrectnessLabel.LESS_COMPREHENSIVE: "答案2提供了不够全面和恰当的信息",
    },
    "hi": {
        CorrectnessLabel.NEITHER: (
            "उत्तर 2 उत्तर 1 की तुलना में न तो विरोधाभासी है और न ही समान जानकारी देता है"
        ),
        CorrectnessLabel.CONTRADICTORY: (
            "उत्तर 2 उत्तर 1 की तुलना में विरोधाभासी जानकारी देता है"
        ),
        CorrectnessLabel.MORE_COMPREHENSIVE: (
            "उत्तर 2 अधिक व्यापक और उपयुक्त जानकारी देता है।"
        ),
        CorrectnessLabel.LESS_COMPREHENSIVE: (
            "उत्तर 2 कम व्यापक और उपयुक्त जानकारी देता है"
        ),
    },
}

_TRAILING_PUNCT = ".!?;:,。！？।॥…\"'”’)、 \t"
_WS_RE = re.compile(r"\s+")


def load_option_strings(path: str | Path) -> None:
    """Install option strings from a JSON table {lang: {label_value: text}}."""
    table = json.loads(Path(path).read_text(encoding="utf-8"))
    for lang, entries in table.items():
        _OPTION_STRINGS[lang] = {
            CorrectnessLabel(value): text for value, text in entries.items()
        }


def option_string(label: CorrectnessLabel, language: str = "en") -> str:
    return _OPTION_STRINGS[language][label]


def _normalize(text: str) -> str:
    return _WS_RE.sub(" ", text).strip().rstrip(_TRAILING_PUNCT)


def parse_correctness_label(
    completion_text: str, language: str = "en"
) -> tuple[CorrectnessLabel, str]:
    """Scan lines bottom-up for the first containing exactly one canonical
    option string; text above that line is the reasoning. Total: anything
    unparseable maps to NO_RESPONSE with the full text as reasoning."""
    options = _OPTION_STRINGS.get(language, _OPTION_STRINGS["en"])
    normalized_options = {
        label: _normalize(text) for label, text in options.items()
    }
    # split on plain newlines only: splitlines() would also cut on exotic
    # separators and break exact reasoning reconstruction
    lines = completion_text.split("\n")
    for i in range(len(lines) - 1, -1, -1):
        line = _normalize(lines[i])
        if not line:
            continue
        hits = [
            label
            for label, canon in normalized_options.items()
            if canon and canon in line
        ]
        if len(hits) == 1:
            reasoning = "\n".join(lines[:i]).strip()
            return hits[0], reasoning
    return CorrectnessLabel.NO_RESPONSE, completion_text.strip()
