"""Exception types shared across the harness."""

from __future__ import annotations


class CrossevalError(Exception):
    """Base class for all harness errors."""


# --- dataset loading -------------------------------------------------------

class DatasetError(CrossevalError):
    pass


class MissingField(DatasetError):
    def __init__(self, row: int, field: str):
        super().__init__(f"row {row}: missing required field '{field}'")
        self.row = row
        self.field = field


class DuplicateId(DatasetError):
    def __init__(self, id_: str):
        super().__init__(f"duplicate id '{id_}' within dataset+language")
        self.id = id_


class EmptyText(DatasetError):
    def __init__(self, row: int, field: str):
        super().__init__(f"row {row}: field '{field}' is empty after trimming")
        self.row = row
        self.field = field


class InsufficientAnswers(DatasetError):
    def __init__(self, needed: int, available: int):
        super().__init__(
            f"answer pool too small: need {needed} distinct answers, have {available}"
        )
        self.needed = needed
        self.available = available


class NoJudgments(CrossevalError):
    pass


# --- LLM gateway -----------------------------------------------------------

class ProviderError(CrossevalError):
    pass


class ProviderUnavailable(ProviderError):
    pass


class AuthError(ProviderError):
    pass


class BudgetExceeded(ProviderError):
    def __init__(self, limit: int):
        super().__init__(f"provider call budget of {limit} exhausted")
        self.limit = limit


class EmptyInput(CrossevalError):
    pass


# --- prompting -------------------------------------------------------------

class UnboundPlaceholder(CrossevalError):
    def __init__(self, name: str):
        super().__init__(f"placeholder [{name}] left unbound")
        self.name = name


# --- metrics ---------------------------------------------------------------

class DegenerateInput(CrossevalError):
    pass


class ZeroVector(CrossevalError):
    pass


class EmptyTokens(CrossevalError):
    pass


class TooFewAnswers(CrossevalError):
    pass


class NoSentences(CrossevalError):
    pass


class MixedDatasets(CrossevalError):
    pass


# --- topic models ----------------------------------------------------------

class EmptyCorpus(CrossevalError):
    pass


class DimensionMismatch(CrossevalError):
    pass


# --- statistics ------------------------------------------------------------

class StatsError(CrossevalError):
    pass


class DegenerateVariance(StatsError):
    pass


class LengthMismatch(StatsError):
    pass


class NonConvergence(StatsError):
    pass


class SingleClass(StatsError):
    pass


# --- reporting -------------------------------------------------------------

class ZeroBaseline(CrossevalError):
    pass


class IncompleteRun(CrossevalError):
    def __init__(self, missing: list[str]):
        super().__init__(f"missing cells: {', '.join(missing)}")
        self.missing = missing


# --- annotation ------------------------------------------------------------

class IncompleteBatch(CrossevalError):
    def __init__(self, unjudged: list[str]):
        super().__init__(f"unjudged tasks: {', '.join(unjudged)}")
        self.unjudged = unjudged


# --- config ----------------------------------------------------------------

class ConfigError(CrossevalError):
    pass
