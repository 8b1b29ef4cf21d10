"""Unicode-aware word and sentence segmentation.

Word tokenization approximates default Unicode word segmentation: runs of
letters/marks/digits form words, a period or apostrophe between two word
characters does not break a word, a comma joins only digit-digit, and each
Han ideograph is its own token (kana runs stay together). Punctuation and
whitespace never count as tokens.
"""

from __future__ import annotations

import regex

_BASE = r"[[\p{L}\p{M}\p{Nd}]--[\p{Han}\p{Hiragana}\p{Katakana}]]"
_WORD_RE = regex.compile(
    r"\p{Han}"
    r"|[\p{Hiragana}\p{Katakana}\p{M}]+"
    rf"|{_BASE}+(?:(?:['’.]|(?<=\p{{Nd}}),(?=\p{{Nd}})){_BASE}+)*",
    regex.V1,
)

_TERMINATORS = frozenset(".!?。！？؟।॥…")
_FULL_STOP_ALWAYS = frozenset("。！？।॥")
_CLOSERS = frozenset("\"')]}»”’")


def word_tokens(text: str, lowercase: bool = False) -> list[str]:
    """Word tokens in order of appearance; empty input gives an empty list."""
    tokens = _WORD_RE.findall(text)
    if lowercase:
        tokens = [t.lower() for t in tokens]
    return tokens


def word_count(text: str) -> int:
    """Number of word tokens, punctuation and spaces excluded."""
    return len(_WORD_RE.findall(text))


def split_sentences(text: str) -> list[str]:
    """Split on sentence terminators; trailing text without one still counts.

    A period only terminates when followed by whitespace or end-of-text and
    not sandwiched between digits; CJK and Devanagari terminators always do.
    """
    sentences: list[str] = []
    start = 0
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch not in _TERMINATORS:
            i += 1
            continue
        if ch == "." and i + 1 < n and text[i + 1].isdigit():
            i += 1
            continue
        j = i + 1
        while j < n and text[j] in _CLOSERS:
            j += 1
        if ch in _FULL_STOP_ALWAYS or j >= n or text[j].isspace():
            piece = text[start:j].strip()
            if piece:
                sentences.append(piece)
            start = j
            i = j
        else:
            i += 1
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences
