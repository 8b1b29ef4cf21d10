import pytest

from crosseval.consistency import (
    AnswerSet,
    HashingEmbeddingProvider,
    collect_answer_sets,
    evaluate_consistency,
    fit_topic_models,
    load_scores_csv,
    save_scores_csv,
    score_answer_set,
)
from crosseval.langid import FixedLanguageIdentifier
from crosseval.llmgate import LlmClient, MockChatProvider
from tests.conftest import pipeline_rules


@pytest.fixture
def identifier():
    return FixedLanguageIdentifier("en")


def identical_answer_sets(n_questions=2, k=4):
    text = "Drink water daily. Sleep eight hours. Exercise often."
    return [
        AnswerSet(question_id=f"q{i}", language="en", temperature=0.0,
                  answers=[text] * k)
        for i in range(1, n_questions + 1)
    ]


class TestScoreAnswerSet:
    def test_identical_answers_all_ones(self, identifier):
        sets = identical_answer_sets()
        models = fit_topic_models(sets, seed=3, n_iterations=30)
        scores = score_answer_set(sets[0], HashingEmbeddingProvider(), models, identifier)
        assert scores.sim_1gram == 1.0
        assert scores.sim_2gram == 1.0
        assert scores.bertscore_f == pytest.approx(1.0)
        assert scores.sim_sent == pytest.approx(1.0)
        assert scores.sim_lda_20 == pytest.approx(1.0)
        assert scores.sim_lda_100 == pytest.approx(1.0)
        assert scores.sim_hdp == pytest.approx(1.0)
        assert scores.lang_cons == 1.0
        assert scores.length_mean == pytest.approx(8.0)

    def test_all_fields_in_range(self, identifier):
        texts = [
            "Drink water daily and rest.",
            "Rest is needed with fluids.",
            "Take the tablet twice a day.",
        ]
        sets = [AnswerSet("q1", "en", 0.5, texts)] + identical_answer_sets(1)
        models = fit_topic_models(sets, seed=5, n_iterations=30)
        scores = score_answer_set(sets[0], HashingEmbeddingProvider(), models, identifier)
        for name in ("sim_1gram", "sim_2gram", "bertscore_f", "sim_sent",
                     "sim_lda_20", "sim_lda_100", "sim_hdp", "lang_cons"):
            value = getattr(scores, name)
            assert 0.0 <= value <= 1.0, name
        assert scores.length_mean > 0

    def test_back_translation_flag(self, identifier):
        class CountingTranslator:
            def __init__(self):
                self.calls = 0

            def translate(self, text, source_lang, target_lang):
                self.calls += 1
                return "two words"

        sets = [
            AnswerSet("q1", "es", 0.0, ["Beba agua todos los dias.", "Descanse bien siempre."])
        ]
        models = fit_topic_models(sets, seed=1, n_iterations=20)
        translator = CountingTranslator()
        scored = score_answer_set(
            sets[0], HashingEmbeddingProvider(), models, FixedLanguageIdentifier("es"),
            translator=translator, back_translate_length=True,
        )
        assert translator.calls == 2
        assert scored.length_mean == pytest.approx(2.0)
        # without the flag the translator is not consulted
        translator.calls = 0
        score_answer_set(
            sets[0], HashingEmbeddingProvider(), models, FixedLanguageIdentifier("es"),
            translator=translator, back_translate_length=False,
        )
        assert translator.calls == 0


class TestCollectAndEvaluate:
    def test_collect_excludes_filtered(self, small_dataset):
        class FilterIndexTwo:
            def complete_chat(self, sample_index=0, **kwargs):
                from crosseval.llmgate import ProviderReply

                if sample_index == 2:
                    return ProviderReply(text="", filtered=True)
                return ProviderReply(text=f"Answer variant {sample_index}. Stay hydrated.")

        client = LlmClient(FilterIndexTwo())
        sets = collect_answer_sets(small_dataset, client, "m", "en", 0.0, 4)
        assert all(s.k_effective == 3 for s in sets)
        assert all(s.n_filtered == 1 for s in sets)

    def test_deterministic_mock_all_metrics_one(self, small_dataset, identifier):
        rules = [
            {
                "match": "Please answer the following medical question",
                "response": "Drink water daily. Rest well tonight.",
            },
            {"match": "*", "response": "OK"},
        ]
        client = LlmClient(MockChatProvider(rules=rules))
        scores = evaluate_consistency(
            small_dataset, client, "m", "en", 0.0, 3,
            HashingEmbeddingProvider(), identifier, seed=3, topic_iterations=20,
        )
        assert len(scores) == 3
        for s in scores:
            assert s.sim_1gram == 1.0
            assert s.sim_sent == pytest.approx(1.0)
            assert s.lang_cons == 1.0

    def test_cached_rerun_identical(self, small_dataset, identifier, tmp_path):
        from crosseval.llmgate import CompletionCache

        provider = MockChatProvider(rules=pipeline_rules())
        cache_path = tmp_path / "cache.jsonl"

        def run():
            client = LlmClient(provider, cache=CompletionCache(cache_path))
            return evaluate_consistency(
                small_dataset, client, "m", "en", 0.5, 3,
                HashingEmbeddingProvider(), identifier, seed=9, topic_iterations=20,
            )

        first = run()
        calls = provider.call_count
        second = run()
        assert provider.call_count == calls
        assert [s.to_record() for s in first] == [s.to_record() for s in second]

    def test_csv_round_trip(self, small_dataset, identifier, tmp_path, mock_client):
        scores = evaluate_consistency(
            small_dataset, mock_client, "m", "en", 0.0, 3,
            HashingEmbeddingProvider(), identifier, seed=1, topic_iterations=20,
        )
        path = tmp_path / "scores.csv"
        save_scores_csv(scores, path)
        loaded = load_scores_csv(path)
        assert len(loaded) == len(scores)
        for a, b in zip(scores, loaded):
            assert a.question_id == b.question_id
            assert a.sim_2gram == pytest.approx(b.sim_2gram)
