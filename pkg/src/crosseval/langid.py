"""Pluggable sentence-language identification.

The default identifier combines a script check (Han -> zh, Devanagari -> hi)
with rank-ordered character n-gram profiles for languages sharing a script.
Profiles are built once at import from small embedded seed texts; callers can
register additional languages with their own seed text.
"""

from __future__ import annotations

from collections import Counter
from typing import Protocol

import regex

_HAN = regex.compile(r"\p{Han}")
_DEVANAGARI = regex.compile(r"\p{Devanagari}")
_LETTER = regex.compile(r"\p{L}")

_SEED_TEXTS = {
    "en": (
        "The patient should drink plenty of water and rest. Regular exercise "
        "improves overall health and mood. This medication may cause drowsiness "
        "in some people. Ask your doctor or pharmacist before taking any new "
        "medicine with other drugs. Symptoms usually improve within a few days. "
        "If the pain continues for more than a week, you should see a doctor."
    ),
    "es": (
        "El paciente debe beber mucha agua y descansar. El ejercicio regular "
        "mejora la salud general y el estado de animo. Este medicamento puede "
        "causar somnolencia en algunas personas. Consulte a su medico o "
        "farmaceutico antes de tomar un nuevo medicamento junto con otros. Los "
        "sintomas suelen mejorar en pocos dias. Si el dolor continua durante mas "
        "de una semana, debe acudir al medico."
    ),
    "zh": (
        "患者应该多喝水并注意休息。经常锻炼有助于增强体质。这种药物可能会引起嗜睡。"
        "服用新药之前请咨询医生或药剂师。症状通常会在几天内好转。如果疼痛持续一周以上请就医。"
    ),
    "hi": (
        "रोगी को खूब पानी पीना चाहिए और आराम करना चाहिए। नियमित व्यायाम से स्वास्थ्य में "
        "सुधार होता है। यह दवा कुछ लोगों में नींद ला सकती है। कोई भी नई दवा लेने से पहले "
        "अपने चिकित्सक से परामर्श करें। लक्षण आमतौर पर कुछ दिनों में ठीक हो जाते हैं।"
    ),
}

_PROFILE_SIZE = 300


class LanguageIdentifier(Protocol):
    def identify(self, text: str) -> str:
        """Return a language tag for the text."""
        ...


def _ngrams(text: str, max_n: int = 3) -> Counter:
    padded = " " + " ".join(text.lower().split()) + " "
    grams: Counter = Counter()
    for n in range(1, max_n + 1):
        for i in range(len(padded) - n + 1):
            grams[padded[i : i + n]] += 1
    return grams


def _rank_profile(text: str) -> dict[str, int]:
    grams = _ngrams(text)
    ordered = sorted(grams.items(), key=lambda kv: (-kv[1], kv[0]))
    return {g: rank for rank, (g, _) in enumerate(ordered[:_PROFILE_SIZE])}


class TrigramLanguageIdentifier:
    """Cavnar-Trenkle out-of-place matching over 1..3-gram rank profiles."""

    def __init__(self, seed_texts: dict[str, str] | None = None):
        self._profiles = {
            lang: _rank_profile(text)
            for lang, text in (seed_texts or _SEED_TEXTS).items()
        }

    def register(self, lang: str, seed_text: str) -> None:
        self._profiles[lang] = _rank_profile(seed_text)

    def identify(self, text: str) -> str:
        letters = _LETTER.findall(text)
        if letters:
            han = len(_HAN.findall(text))
            deva = len(_DEVANAGARI.findall(text))
            if han / len(letters) >= 0.3 and "zh" in self._profiles:
                return "zh"
            if deva / len(letters) >= 0.3 and "hi" in self._profiles:
                return "hi"
        doc_profile = _rank_profile(text)
        best_lang = "und"
        best_score = None
        for lang, profile in sorted(self._profiles.items()):
            score = 0
            for gram, rank in doc_profile.items():
                score += abs(rank - profile[gram]) if gram in profile else _PROFILE_SIZE
            if best_score is None or score < best_score:
                best_lang, best_score = lang, score
        return best_lang


class FixedLanguageIdentifier:
    """Test double: always answers with the configured tag."""

    def __init__(self, tag: str):
        self._tag = tag

    def identify(self, text: str) -> str:
        return self._tag


DEFAULT_IDENTIFIER = TrigramLanguageIdentifier()
