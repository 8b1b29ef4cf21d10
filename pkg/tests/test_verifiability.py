from fractions import Fraction

import numpy as np
import pytest

from crosseval.corpus import Dataset, build_verifiability_instances
from crosseval.errors import EmptyInput
from crosseval.llmgate import LlmClient, MockChatProvider
from crosseval.verifiability import (
    VerifiabilityOutcome,
    classification_metrics,
    evaluate_verifiability,
    heatmap_matrix,
    judge,
)
from tests.conftest import make_pairs, pipeline_rules


def outcome(truth, predicted, indeterminate=False):
    return VerifiabilityOutcome(
        question_id="q",
        language="en",
        temperature=0.0,
        predicted=predicted,
        truth=truth,
        indeterminate=indeterminate,
    )


def outcomes_from_confusion(tp, fp, tn, fn):
    return (
        [outcome(True, True)] * tp
        + [outcome(False, True)] * fp
        + [outcome(False, False)] * tn
        + [outcome(True, False)] * fn
    )


def brute_force_auc(outcomes):
    """Oracle: iterate every (positive, negative) pair explicitly."""
    positives = [o for o in outcomes if o.truth]
    negatives = [o for o in outcomes if not o.truth]
    if not positives or not negatives:
        return None
    total = Fraction(0)
    for p in positives:
        for n in negatives:
            sp, sn = int(p.predicted), int(n.predicted)
            if sp > sn:
                total += 1
            elif sp == sn:
                total += Fraction(1, 2)
    return total / (len(positives) * len(negatives))


def rank_based_auc(outcomes):
    """Second oracle: Mann-Whitney U from midranks with ties."""
    scores = np.array([int(o.predicted) for o in outcomes], dtype=float)
    truths = np.array([o.truth for o in outcomes])
    n_pos = int(truths.sum())
    n_neg = len(truths) - n_pos
    if not n_pos or not n_neg:
        return None
    order = np.argsort(scores, kind="stable")
    ranks = np.empty(len(scores), dtype=float)
    sorted_scores = scores[order]
    i = 0
    while i < len(scores):
        j = i
        while j + 1 < len(scores) and sorted_scores[j + 1] == sorted_scores[i]:
            j += 1
        ranks[order[i : j + 1]] = (i + j) / 2.0 + 1.0
        i = j + 1
    rank_sum = ranks[truths].sum()
    u = rank_sum - n_pos * (n_pos + 1) / 2.0
    return u / (n_pos * n_neg)


class TestJudge:
    def test_positive_instance_yes(self, small_dataset, mock_client):
        instances = build_verifiability_instances(small_dataset, 2, seed=1)
        positive = next(i for i in instances if i.positive)
        result = judge(mock_client, positive, "m", 0.0)
        assert result.predicted is True and result.truth is True
        assert not result.indeterminate

    def test_negative_instance_no(self, small_dataset, mock_client):
        instances = build_verifiability_instances(small_dataset, 2, seed=1)
        negative = next(i for i in instances if not i.positive)
        result = judge(mock_client, negative, "m", 0.0)
        assert result.predicted is False and result.truth is False

    def test_filtered_becomes_indeterminate(self, small_dataset):
        rules = [{"match": "Respond to me whether", "filtered": True}]
        client = LlmClient(MockChatProvider(rules=rules))
        instances = build_verifiability_instances(small_dataset, 2, seed=1)
        result = judge(client, instances[0], "m", 0.0)
        assert result.indeterminate and result.predicted is False

    def test_provider_error_indeterminate(self, small_dataset):
        from crosseval.errors import ProviderUnavailable

        class Down:
            def complete_chat(self, **kwargs):
                raise ProviderUnavailable("503")

        client = LlmClient(Down(), sleep=lambda s: None)
        instances = build_verifiability_instances(small_dataset, 2, seed=1)
        result = judge(client, instances[0], "m", 0.0)
        assert result.indeterminate and result.predicted is False


class TestClassificationMetrics:
    def test_hand_computed_confusion(self):
        report = classification_metrics(outcomes_from_confusion(tp=8, fp=1, tn=9, fn=1))
        assert report.p_macro == pytest.approx((8 / 9 + 9 / 10) / 2)
        assert report.r_macro == pytest.approx((8 / 9 + 9 / 10) / 2)
        assert report.accuracy == pytest.approx(17 / 19)
        assert report.auc == pytest.approx(report.r_macro)

    def test_perfect(self):
        report = classification_metrics(outcomes_from_confusion(tp=5, fp=0, tn=5, fn=0))
        assert (report.p_macro, report.r_macro, report.f1_macro, report.accuracy,
                report.auc) == (1.0, 1.0, 1.0, 1.0, 1.0)

    def test_all_flipped(self):
        report = classification_metrics(outcomes_from_confusion(tp=0, fp=5, tn=0, fn=5))
        assert report.accuracy == 0.0
        assert report.r_macro == 0.0

    def test_single_class_auc_absent(self):
        report = classification_metrics([outcome(True, True), outcome(True, False)])
        assert report.auc is None

    def test_empty_raises(self):
        with pytest.raises(EmptyInput):
            classification_metrics([])

    def test_order_invariant(self):
        data = outcomes_from_confusion(tp=3, fp=2, tn=4, fn=1)
        rng = np.random.default_rng(0)
        for _ in range(5):
            shuffled = list(data)
            rng.shuffle(shuffled)
            assert classification_metrics(shuffled) == classification_metrics(data)

    def test_auc_equals_macro_recall_on_1000_random_fixtures(self):
        rng = np.random.default_rng(99)
        for _ in range(1000):
            tp, fp, tn, fn = (int(rng.integers(1, 30)) for _ in range(4))
            report = classification_metrics(outcomes_from_confusion(tp, fp, tn, fn))
            # exact rational identity, not approximate
            auc = Fraction(2 * tp * tn + tp * fp + fn * tn, 2 * (tp + fn) * (fp + tn))
            r_macro = (Fraction(tp, tp + fn) + Fraction(tn, tn + fp)) / 2
            assert auc == r_macro
            assert report.auc == pytest.approx(float(auc), abs=1e-15)

    def test_brute_force_and_rank_oracles_agree(self):
        rng = np.random.default_rng(123)
        for _ in range(50):
            n = int(rng.integers(4, 200))
            data = [
                outcome(bool(rng.integers(2)), bool(rng.integers(2))) for _ in range(n)
            ]
            if not any(o.truth for o in data) or all(o.truth for o in data):
                continue
            report = classification_metrics(data)
            brute = brute_force_auc(data)
            ranked = rank_based_auc(data)
            assert report.auc == pytest.approx(float(brute), abs=1e-12)
            assert float(brute) == pytest.approx(ranked, abs=1e-12)

    def test_accuracy_recomputation(self):
        data = outcomes_from_confusion(tp=7, fp=3, tn=6, fn=4)
        report = classification_metrics(data)
        assert report.accuracy == (report.tp + report.tn) / report.total


class TestEvaluate:
    def test_perfect_judge_all_ones_sd_zero(self, small_dataset, mock_client):
        instances = build_verifiability_instances(small_dataset, 2, seed=1)
        run = evaluate_verifiability(
            instances, mock_client, "m", "en", [0.0, 0.25, 0.5, 0.75, 1.0]
        )
        assert len(run.reports) == 5
        summary = run.summary()
        for name in ("p_macro", "r_macro", "f1_macro", "accuracy", "auc"):
            assert summary[name].mean == 1.0
            assert summary[name].sd == 0.0

    def test_flipping_judge_worst_case(self, small_dataset):
        rules = []
        for i in (1, 2, 3):
            rules.append(
                {
                    "match_all": ["Respond to me whether", f"ask-q{i} ", f"ans-q{i} "],
                    "response": "No, incorrect.",
                }
            )
        rules.append({"match": "Respond to me whether", "response": "Yes, correct."})
        client = LlmClient(MockChatProvider(rules=rules))
        instances = build_verifiability_instances(small_dataset, 2, seed=1)
        run = evaluate_verifiability(instances, client, "m", "en", [0.0])
        report = run.reports[0.0]
        assert report.accuracy == 0.0
        assert report.r_macro == 0.0

    def test_summary_formatting_fixture(self):
        # accuracy sequence engineered to mean 0.9220 and sample sd 0.0015
        from crosseval.verifiability import VerifiabilityRun

        taus = [0.0, 0.25, 0.5, 0.75, 1.0]
        corrects = [9201, 9210, 9220, 9230, 9239]
        run = VerifiabilityRun(language="en", tau_grid=taus)
        for tau, correct in zip(taus, corrects):
            wrong = 10000 - correct
            data = outcomes_from_confusion(
                tp=correct // 2, fp=wrong // 2, tn=correct - correct // 2,
                fn=wrong - wrong // 2,
            )
            run.reports[tau] = classification_metrics(data)
            run.outcomes[tau] = data
        summary = run.summary()
        assert summary["accuracy"].formatted() == "0.9220 ± 0.0015"

    def test_heatmap_matrix_shape(self, small_dataset, mock_client):
        instances = build_verifiability_instances(small_dataset, 2, seed=1)
        run = evaluate_verifiability(instances, mock_client, "m", "en", [0.0, 1.0])
        matrix = heatmap_matrix({"en": run}, "accuracy")
        assert matrix["languages"] == ["en"]
        assert matrix["taus"] == [0.0, 1.0]
        assert matrix["values"] == [[1.0], [1.0]]

    def test_empty_grid_rejected(self, small_dataset, mock_client):
        instances = build_verifiability_instances(small_dataset, 2, seed=1)
        with pytest.raises(ValueError):
            evaluate_verifiability(instances, mock_client, "m", "en", [])
