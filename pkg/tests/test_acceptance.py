"""Acceptance criteria, one test per criterion.

Run with `pytest tests/test_acceptance.py -v -s` to see one line per
criterion. Every tolerance is pinned here; nothing is deferred.
"""

import json
import time
from decimal import Decimal
from fractions import Fraction

import numpy as np
import pytest

OK = "ACCEPTANCE {name}: PASS ({elapsed:.2f}s)"


def report(name, start):
    print(OK.format(name=name, elapsed=time.monotonic() - start), flush=True)


def test_report_arithmetic_vs_published_tables():
    start = time.monotonic()
    from crosseval.reporting import (
        contradiction_multiplier,
        english_baseline_decrease,
        relative_decrease,
    )

    decreases = [
        (575, 1013, 1134, 38.62),
        (878, 1013, 1134, 11.90),
        (891, 1013, 1134, 10.76),
        (142, 226, 246, 34.15),
        (407, 618, 690, 30.58),
    ]
    for lang_count, en_count, size, expected in decreases:
        got = relative_decrease(lang_count, en_count, size)
        assert abs(got - expected) <= 0.01, (got, expected)

    multipliers = [
        (47, 3, 15.67),
        (14, 3, 4.67),
        (5, 3, 1.67),
        (13, 3, 4.33),
        (51, 5, 10.2),
        (48, 5, 9.6),
        (23, 5, 4.6),
    ]
    for lang_count, en_count, expected in multipliers:
        got = contradiction_multiplier(lang_count, en_count)
        assert abs(got - expected) <= 0.005, (got, expected)

    baselines = [(15, 193, 92.23), (4, 193, 97.93), (13, 193, 93.26)]
    for lang_count, en_count, expected in baselines:
        got = english_baseline_decrease(lang_count, en_count)
        assert abs(got - expected) <= 0.01, (got, expected)

    elapsed = time.monotonic() - start
    assert elapsed < 1.0, f"runtime budget exceeded: {elapsed:.2f}s"
    report("report-arithmetic", start)


def test_percent_drop_suite():
    start = time.monotonic()
    from crosseval.reporting import percent_drop

    # (metric_lang, metric_en, printed drop) pairs from the published table
    fixtures = [
        (0.9415, 0.9706, -3.0),
        (0.1715, 0.3476, -50.7),
        (0.9677, 0.9699, -0.2),
        (0.5797, 0.7040, -17.7),
        (0.3717, 0.5201, -28.5),
        (0.2009, 0.3533, -43.1),
        (78.3874, 109.0798, -28.1),
        (134.9392, 131.3095, 2.8),
        (0.9111, 0.8913, 2.2),
        (0.5979, 0.8784, -31.9),
        (0.3329, 0.4798, -30.6),
        (0.1515, 0.3060, -50.5),
        (0.8055, 0.9104, -11.5),
        (0.6490, 0.8694, -25.4),
    ]
    for metric_lang, metric_en, expected in fixtures:
        got = percent_drop(metric_lang, metric_en)
        assert abs(got - expected) <= 0.1, (metric_lang, metric_en, got, expected)
    report("percent-drop-suite", start)


def test_human_eval_correlation_averages(tmp_path):
    start = time.monotonic()
    from crosseval.annotate import (
        AnnotationStore,
        AnnotationTask,
        Judgment,
        average_percentages,
    )
    from crosseval.prompting import CorrectnessLabel

    fixtures = {
        "en": ([(51, 49), (52, 48)], Decimal("94.20")),
        "es": ([(51, 48), (52, 50)], Decimal("95.14")),
        "zh": ([(51, 36), (52, 44)], Decimal("77.61")),
        "hi": ([(51, 43), (52, 44)], Decimal("84.47")),
    }
    store = AnnotationStore(tmp_path / "journal.jsonl")
    for lang, (batches, expected_avg) in fixtures.items():
        correlations = []
        for b, (total, matching) in enumerate(batches, start=1):
            batch_id = f"{lang}-b{b}"
            tasks = [
                AnnotationTask(
                    task_id=f"{batch_id}-t{i}",
                    batch_id=batch_id,
                    language=lang,
                    question=f"Q{i}",
                    ground_truth="expert",
                    llm_answer="model",
                    automated_reasoning="because",
                    automated_label=CorrectnessLabel.MORE_COMPREHENSIVE,
                )
                for i in range(total)
            ]
            store.create_batch(batch_id, tasks, ["a1"])
            for i in range(total):
                if i < matching:
                    store.submit(Judgment(f"{batch_id}-t{i}", "a1", True))
                else:
                    store.submit(
                        Judgment(
                            f"{batch_id}-t{i}",
                            "a1",
                            False,
                            disagreement_reason="label off",
                            corrected_label=CorrectnessLabel.CONTRADICTORY,
                        )
                    )
            correlations.append(store.batch_report(batch_id).correlation)
        average = average_percentages(correlations)
        assert abs(average - expected_avg) <= Decimal("0.01"), (lang, average)
    report("human-eval-correlation", start)


def test_verifiability_auc_identity():
    start = time.monotonic()
    from crosseval.verifiability import classification_metrics
    from tests.test_verifiability import (
        brute_force_auc,
        outcome,
        outcomes_from_confusion,
        rank_based_auc,
    )

    rng = np.random.default_rng(2027)
    # 1,000 randomized binary-prediction fixtures: exact rational identity
    for _ in range(1000):
        tp, fp, tn, fn = (int(rng.integers(1, 40)) for _ in range(4))
        report_obj = classification_metrics(outcomes_from_confusion(tp, fp, tn, fn))
        auc = Fraction(2 * tp * tn + tp * fp + fn * tn, 2 * (tp + fn) * (fp + tn))
        r_macro = (Fraction(tp, tp + fn) + Fraction(tn, tn + fp)) / 2
        assert auc == r_macro
        assert report_obj.auc == pytest.approx(float(auc), abs=0)

    # brute-force pairwise oracle vs rank computation on instances <= 200
    for _ in range(40):
        n = int(rng.integers(4, 201))
        data = [outcome(bool(rng.integers(2)), bool(rng.integers(2))) for _ in range(n)]
        if not any(o.truth for o in data) or all(o.truth for o in data):
            continue
        brute = brute_force_auc(data)
        ranked = rank_based_auc(data)
        assert float(brute) == pytest.approx(ranked, abs=1e-12)
        assert classification_metrics(data).auc == pytest.approx(float(brute), abs=1e-12)
    report("verifiability-auc-identity", start)


def test_statistics_kernel():
    start = time.monotonic()
    from crosseval.stats import (
        SampleGroup,
        cohens_kappa,
        one_way_anova,
        studentized_range_cdf,
        unpaired_t_test,
    )

    # closed-form ANOVA
    res = one_way_anova(
        [SampleGroup("a", [1, 2, 3]), SampleGroup("b", [2, 3, 4]), SampleGroup("c", [3, 4, 5])]
    )
    assert res.statistic == pytest.approx(3.0, abs=1e-12)
    assert res.p_value == pytest.approx(0.125, abs=1e-9)

    # F = t^2 on 100 random two-group fixtures
    rng = np.random.default_rng(515)
    for _ in range(100):
        a = SampleGroup("a", rng.normal(0, 1, int(rng.integers(3, 15))).tolist())
        b = SampleGroup("b", rng.normal(0.3, 1.5, int(rng.integers(3, 15))).tolist())
        anova = one_way_anova([a, b])
        ttest = unpaired_t_test(a, b)
        assert anova.statistic == pytest.approx(ttest.statistic**2, abs=1e-9)
        assert anova.p_value == pytest.approx(ttest.p_value, abs=1e-9)

    # studentized range at the published critical value
    value = studentized_range_cdf(3.88, 3, 10)
    assert 0.945 <= value <= 0.955, value

    # Monte Carlo oracle (10^7 draws) agrees
    hits = total = 0
    mc_rng = np.random.default_rng(99)
    for _ in range(10):
        normals = mc_rng.normal(size=(1_000_000, 3))
        scale = np.sqrt(mc_rng.chisquare(10, size=1_000_000) / 10)
        stat = (normals.max(axis=1) - normals.min(axis=1)) / scale
        hits += int((stat <= 3.88).sum())
        total += len(stat)
    assert value == pytest.approx(hits / total, abs=1e-3)

    # trivial exactness
    t_res = unpaired_t_test(SampleGroup("a", [1, 2, 3]), SampleGroup("b", [1, 2, 3]))
    assert t_res.statistic == 0.0 and t_res.p_value == 1.0
    assert cohens_kappa(["x", "y"], ["x", "y"]) == 1.0
    assert cohens_kappa([1, 1, 0, 0], [1, 0, 1, 0]) == 0.0

    elapsed = time.monotonic() - start
    assert elapsed < 30.0, f"runtime budget exceeded: {elapsed:.2f}s"
    report("statistics-kernel", start)


def test_metric_oracles():
    start = time.monotonic()
    from crosseval.consistency import bertscore, ngram_similarity, pairwise_mean
    from tests.test_metrics import (
        WORDS,
        brute_force_bertscore,
        brute_force_jaccard,
    )

    rng = np.random.default_rng(31)
    # n-gram Jaccard vs brute-force sets on 1,000 random short texts
    for _ in range(1000):
        a = " ".join(rng.choice(WORDS, size=rng.integers(0, 9)))
        b = " ".join(rng.choice(WORDS, size=rng.integers(0, 9)))
        n = int(rng.integers(1, 3))
        assert ngram_similarity(a, b, n) == pytest.approx(
            brute_force_jaccard(a, b, n), abs=1e-12
        )

    # greedy-matching score vs O(n*m) brute force
    for _ in range(400):
        va = rng.normal(size=(int(rng.integers(1, 7)), 5)).tolist()
        vb = rng.normal(size=(int(rng.integers(1, 7)), 5)).tolist()
        assert bertscore(va, vb) == pytest.approx(brute_force_bertscore(va, vb), abs=1e-10)

    # pairwise mean over K=10 averages exactly 45 pairs
    counter = {"pairs": 0}

    def counting_metric(a, b):
        counter["pairs"] += 1
        return 0.5

    assert pairwise_mean(counting_metric, [str(i) for i in range(10)]) == 0.5
    assert counter["pairs"] == 45

    # property blast: identity, symmetry, range over >= 10,000 cases
    from crosseval.consistency import HashingEmbeddingProvider, clamp01, sentence_similarity

    provider = HashingEmbeddingProvider(dimension=16)
    texts = [" ".join(rng.choice(WORDS, size=rng.integers(1, 9))) for _ in range(150)]
    cases = 0
    for _ in range(2600):
        a, b = rng.choice(texts), rng.choice(texts)
        n = int(rng.integers(1, 3))
        s = ngram_similarity(a, b, n)
        assert 0.0 <= s <= 1.0
        assert s == ngram_similarity(b, a, n)
        assert ngram_similarity(a, a, n) == 1.0
        cases += 3
    for _ in range(500):
        a, b = rng.choice(texts), rng.choice(texts)
        va, vb = provider.embed_sentence(a), provider.embed_sentence(b)
        assert sentence_similarity(va, vb) == pytest.approx(
            sentence_similarity(vb, va), abs=1e-12
        )
        assert 0.0 <= clamp01(sentence_similarity(va, vb)) <= 1.0
        assert clamp01(sentence_similarity(va, va)) == pytest.approx(1.0)
        cases += 3
    for _ in range(250):
        a, b = rng.choice(texts), rng.choice(texts)
        _, va = provider.embed_tokens(a)
        _, vb = provider.embed_tokens(b)
        p, r, f = bertscore(va, vb)
        p2, r2, _ = bertscore(vb, va)
        assert p == pytest.approx(r2, abs=1e-12)
        assert r == pytest.approx(p2, abs=1e-12)
        assert bertscore(va, va) == pytest.approx((1.0, 1.0, 1.0))
        cases += 4
    assert cases >= 10000, cases
    report("metric-oracles", start)


def test_topic_models_synthetic_corpus():
    start = time.monotonic()
    from crosseval.topics import (
        fit_hdp,
        fit_lda,
        infer_topic_distribution,
        topic_similarity,
    )
    from tests.test_topics import two_topic_corpus

    corpus = two_topic_corpus(n_docs=200, doc_len=30, seed=42)

    model = fit_lda(corpus, n_topics=2, alpha=0.5, n_iterations=300, seed=11)
    phi = model.topic_word_distributions()
    alpha_ids = [i for i, w in enumerate(model.vocabulary) if w.startswith("alpha")]
    beta_ids = [i for i, w in enumerate(model.vocabulary) if w.startswith("beta")]
    for k in range(2):
        assert max(phi[k, alpha_ids].sum(), phi[k, beta_ids].sum()) >= 0.9

    within, cross = [], []
    for i in range(0, 40, 2):
        t_even = infer_topic_distribution(model, corpus[i])
        t_even2 = infer_topic_distribution(model, corpus[(i + 2) % 200])
        t_odd = infer_topic_distribution(model, corpus[i + 1])
        within.append(topic_similarity(t_even, t_even2))
        cross.append(topic_similarity(t_even, t_odd))
    assert np.mean(within) - np.mean(cross) >= 0.3

    hdp = fit_hdp(corpus, truncation=50, n_iterations=200, seed=13)
    assert 2 <= hdp.n_realized <= 6, hdp.n_realized
    totals = np.sort(hdp.topic_totals)[::-1]
    assert totals[:2].sum() / totals.sum() >= 0.8

    # bit reproducibility under fixed seeds
    model2 = fit_lda(corpus, n_topics=2, alpha=0.5, n_iterations=300, seed=11)
    assert np.array_equal(model.topic_word_counts, model2.topic_word_counts)
    hdp2 = fit_hdp(corpus, truncation=50, n_iterations=200, seed=13)
    assert np.array_equal(hdp.topic_word_counts, hdp2.topic_word_counts)
    assert np.array_equal(hdp.global_weights, hdp2.global_weights)

    elapsed = time.monotonic() - start
    assert elapsed < 120.0, f"runtime budget exceeded: {elapsed:.2f}s"
    report("topic-models", start)


def test_end_to_end_determinism(tmp_path):
    start = time.monotonic()
    from click.testing import CliRunner

    from crosseval.cli import main
    from crosseval.corpus import Dataset, save_dataset
    from tests.conftest import make_pairs, pipeline_rules, write_rules

    data_path = tmp_path / "demo.jsonl"
    save_dataset(Dataset(pairs=make_pairs(3)), data_path)
    rules_path = write_rules(tmp_path / "rules.json", pipeline_rules(contradictory=(2,)))
    config_path = tmp_path / "run.toml"
    config_path.write_text(
        f"""
[run]
output_dir = "{tmp_path / 'out'}"
seed = 7
languages = ["en"]

[datasets]
demo = "{data_path}"

[llm]
provider = "mock"
fixture = "{rules_path}"
model = "demo-model"
cache_path = "{tmp_path / 'out' / 'cache.jsonl'}"

[consistency]
k_samples = 3
tau_grid = [0.0, 1.0]
topic_iterations = 20

[verifiability]
negatives_per_question = 2
tau_grid = [0.0, 0.5, 1.0]
""",
        encoding="utf-8",
    )

    runner = CliRunner()

    def run_all():
        for args in (
            ("correctness", "run", "--dataset", "demo", "--lang", "en"),
            ("correctness", "aggregate", "--dataset", "demo"),
            ("consistency", "run", "--dataset", "demo", "--lang", "en"),
            ("verifiability", "--dataset", "demo", "--lang", "en"),
        ):
            result = runner.invoke(main, ["--config", str(config_path), *args])
            assert result.exit_code == 0, result.output

    out = tmp_path / "out"
    run_all()
    exports = [
        "verdicts_demo_en.jsonl",
        "contingency_demo.csv",
        "consistency_demo_en.csv",
        "verifiability_demo_en.json",
        "heatmap_accuracy_demo_en.json",
        "manifest.json",
    ]
    first = {name: (out / name).read_bytes() for name in exports}
    cache_size = (out / "cache.jsonl").stat().st_size

    run_all()
    second = {name: (out / name).read_bytes() for name in exports}
    assert first == second, "exports changed between identical runs"
    assert (out / "cache.jsonl").stat().st_size == cache_size, "provider was called on replay"
    report("end-to-end-determinism", start)


def test_prompt_label_contracts():
    start = time.monotonic()
    from crosseval.prompting import (
        CorrectnessLabel,
        option_string,
        parse_correctness_label,
    )

    labeled = [
        CorrectnessLabel.NEITHER,
        CorrectnessLabel.CONTRADICTORY,
        CorrectnessLabel.MORE_COMPREHENSIVE,
        CorrectnessLabel.LESS_COMPREHENSIVE,
    ]
    noise = {
        "en": "The answer covers dosage and side effects. 25.3 mg twice daily.",
        "es": "La respuesta cubre la dosis. Consulte a su médico.",
        "zh": "回答涵盖了剂量信息。请咨询医生。",
        "hi": "उत्तर में खुराक शामिल है। चिकित्सक से परामर्श करें।",
    }
    cases = []
    for language, prefix in noise.items():
        for label in labeled:
            canon = option_string(label, language)
            cases.append((prefix + "\n" + canon, language, label))
            cases.append((prefix + "\n" + canon + ".  \n\n", language, label))
            cases.append((prefix + "\n2) " + canon if label is CorrectnessLabel.CONTRADICTORY
                          else prefix + "\n" + canon + "!", language, label))
    cases.append(("I cannot help with that request.", "en", CorrectnessLabel.NO_RESPONSE))
    cases.append(("", "en", CorrectnessLabel.NO_RESPONSE))
    assert len(cases) >= 50, len(cases)
    for text, language, expected in cases:
        parsed, _ = parse_correctness_label(text, language)
        assert parsed is expected, (text[:40], language, parsed, expected)
    report("prompt-label-contracts", start)
