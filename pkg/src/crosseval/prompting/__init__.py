"""Prompt rendering and structured-outcome parsing."""

from .labels import (
    LABEL_DISPLAY,
    CorrectnessLabel,
    load_option_strings,
    option_string,
    parse_correctness_label,
)
from .templates import TemplateId, load_template, placeholders, render, template_body
from .verdicts import VerdictParse, parse_verifiability_verdict, verdict_to_prediction

__all__ = [
    "TemplateId",
    "render",
    "placeholders",
    "template_body",
    "load_template",
    "CorrectnessLabel",
    "LABEL_DISPLAY",
    "option_string",
    "load_option_strings",
    "parse_correctness_label",
    "VerdictParse",
    "parse_verifiability_verdict",
    "verdict_to_prediction",
]
