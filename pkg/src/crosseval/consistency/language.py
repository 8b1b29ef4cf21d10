"""Language consistency: fraction of generated sentences in the requested
language, averaged over the answers to a question so the score stays in
[0, 1]."""

from __future__ import annotations

from typing import Callable, Sequence

from ..errors import NoSentences
from ..langid import LanguageIdentifier
from ..textseg import split_sentences


def language_consistency(
    answers: Sequence[str],
    target_language: str,
    identifier: LanguageIdentifier,
    splitter: Callable[[str], list[str]] = split_sentences,
) -> float:
    """Mean over answers of (#sentences in target) / (#sentences).

    Empty answers are excluded; raising only when nothing is left to score.
    """
    fractions = []
    for answer in answers:
        sentences = splitter(answer)
        if not sentences:
            continue
        hits = sum(1 for s in sentences if identifier.identify(s) == target_language)
        fractions.append(hits / len(sentences))
    if not fractions:
        raise NoSentences("no answer contained a scorable sentence")
    return sum(fractions) / len(fractions)
