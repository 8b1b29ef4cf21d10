"""Binary claim-authentication verdict extraction.

Negative lexicon spans are matched and blanked first so negated affirmatives
("incorrect", "not correct") never read as agreement; text hitting both
lexicons, or neither, is Indeterminate. Downstream counts Indeterminate as a
Negative prediction and logs the case.
"""

from __future__ import annotations

import enum
import logging

import regex

log = logging.getLogger(__name__)


class VerdictParse(enum.Enum):
    YES = "yes"
    NO = "no"
    INDETERMINATE = "indeterminate"


_LEXICONS: dict[str, dict[str, tuple[str, ...]]] = {
    "en": {
        "affirmative": ("yes", "correct", "accurate", "true", "right"),
        "negative": ("no", "not", "incorrect", "inaccurate", "wrong", "false"),
    },
    "es": {
        "affirmative": ("sí", "si", "correcto", "correcta", "cierto", "verdadero"),
        "negative": ("no", "incorrecto", "incorrecta", "falso", "falsa"),
    },
    "zh": {
        "affirmative": ("是", "正确", "对"),
        "negative": ("不是", "不正确", "错误", "不对", "否"),
    },
    "hi": {
        "affirmative": ("हाँ", "हां", "सही"),
        "negative": ("नहीं", "नहि", "गलत"),
    },
}

_HAN = regex.compile(r"\p{Han}")


def _find_spans(text: str, entry: str) -> list[tuple[int, int]]:
    if _HAN.search(entry):
        spans = []
        start = 0
        while True:
            idx = text.find(entry, start)
            if idx < 0:
                return spans
            spans.append((idx, idx + len(entry)))
            start = idx + len(entry)
    pattern = regex.compile(
        rf"(?<![\p{{L}}\p{{Nd}}]){regex.escape(entry)}(?![\p{{L}}\p{{Nd}}])",
        regex.IGNORECASE,
    )
    return [m.span() for m in pattern.finditer(text)]


def parse_verifiability_verdict(
    completion_text: str, language: str = "en"
) -> tuple[VerdictParse, str]:
    """Returns (parse outcome, note). The note explains Indeterminate cases."""
    lexicon = _LEXICONS.get(language, _LEXICONS["en"])
    text = completion_text

    negative_spans: list[tuple[int, int]] = []
    for entry in lexicon["negative"]:
        negative_spans.extend(_find_spans(text, entry))

    blanked = list(text)
    for start, end in negative_spans:
        for i in range(start, end):
            blanked[i] = "\x00"
    blanked_text = "".join(blanked)

    affirmative_hits = [
        entry for entry in lexicon["affirmative"] if _find_spans(blanked_text, entry)
    ]

    if negative_spans and not affirmative_hits:
        return VerdictParse.NO, ""
    if affirmative_hits and not negative_spans:
        return VerdictParse.YES, ""
    if affirmative_hits and negative_spans:
        note = "both affirmative and negative cues present"
    else:
        note = "no lexicon cue present"
    log.info("indeterminate verdict (%s): %r", note, completion_text[:120])
    return VerdictParse.INDETERMINATE, note


def verdict_to_prediction(parse: VerdictParse) -> bool:
    """Indeterminate maps to a Negative prediction so metrics stay total."""
    return parse is VerdictParse.YES
