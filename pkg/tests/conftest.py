import json

import pytest

from crosseval.corpus import Dataset, Polarity, QAPair
from crosseval.llmgate import CompletionCache, LlmClient, MockChatProvider


def make_pairs(n, language="en", dataset="Custom", prefix="q"):
    return [
        QAPair(
            id=f"{prefix}{i}",
            dataset=dataset,
            language=language,
            question=f"What should I ask-{prefix}{i} about?",
            answer=f"The accepted guidance ans-{prefix}{i} applies here.",
        )
        for i in range(1, n + 1)
    ]


@pytest.fixture
def small_dataset():
    return Dataset(pairs=make_pairs(3))


# Mock rules covering every pipeline prompt shape. Verification replies "Yes"
# only when the question marker and answer marker carry the same index, so
# the judge is a perfect discriminator.
def pipeline_rules(n_questions=3, contradictory=()):
    rules = []
    for i in range(1, n_questions + 1):
        rules.append(
            {
                "match_all": ["Respond to me whether", f"ask-q{i} ", f"ans-q{i} "],
                "response": "Yes, this is a correct answer.",
            }
        )
    rules.append(
        {"match": "Respond to me whether", "response": "No, that response is incorrect."}
    )
    for i in contradictory:
        rules.append(
            {
                "match_all": ["Compare Answer 2 with Answer 1", f"ask-q{i} "],
                "response": (
                    "The generated answer conflicts with the reference.\n"
                    "Answer 2 provides contradictory information compared to Answer 1"
                ),
            }
        )
    rules.append(
        {
            "match": "Compare Answer 2 with Answer 1",
            "response": (
                "The generated answer covers the reference and adds detail.\n"
                "Answer 2 provides more comprehensive and appropriate information."
            ),
        }
    )
    rules.append(
        {
            "match": "Please answer this health- and medical-related queries",
            "response": "Take the recommended dose with water. Rest well afterwards.",
        }
    )
    rules.append(
        {
            "match": "Please answer the following medical question",
            "response": (
                "Drink plenty of water every day. Get enough sleep at night. "
                "This is sample {k} of the advice."
            ),
        }
    )
    rules.append({"match": "*", "response": "OK"})
    return rules


@pytest.fixture
def mock_client(tmp_path):
    provider = MockChatProvider(rules=pipeline_rules())
    cache = CompletionCache(tmp_path / "cache.jsonl")
    client = LlmClient(provider, cache=cache)
    return client


def write_rules(path, rules):
    path.write_text(json.dumps({"rules": rules}), encoding="utf-8")
    return path
