"""Command-line orchestration of the evaluation pipelines."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .. import annotate as annotate_mod
from ..consistency import (
    SCORE_FIELDS,
    HashingEmbeddingProvider,
    HttpEmbeddingProvider,
    evaluate_consistency,
    load_scores_csv,
    save_scores_csv,
    save_scores_jsonl,
)
from ..corpus import build_verifiability_instances, load_dataset
from ..correctness import (
    aggregate_labels,
    load_verdicts,
    run_correctness,
    save_verdicts,
    stratified_sample,
)
from ..errors import ConfigError, CrossevalError
from ..langid import DEFAULT_IDENTIFIER
from ..llmgate import CompletionCache, HttpChatProvider, LlmClient, MockChatProvider
from ..prompting import CorrectnessLabel
from ..reporting import (
    RunManifest,
    checksum_file,
    export_contingency_csv,
    export_heatmap_csv,
    export_heatmap_json,
    export_rows_csv,
)
from ..stats import (
    SampleGroup,
    format_statistic_pair,
    one_way_anova,
    significance_stars,
    tukey_hsd,
    unpaired_t_test,
)
from ..verifiability import METRIC_FIELDS, evaluate_verifiability, heatmap_matrix
from .config import RunConfig, load_config


def _build_client(cfg: RunConfig) -> LlmClient:
    llm = cfg.section("llm")
    if llm["provider"] == "mock":
        if not llm["fixture"]:
            raise ConfigError("llm.provider = 'mock' requires llm.fixture")
        provider = MockChatProvider(fixture_path=llm["fixture"])
    elif llm["provider"] == "http":
        if not llm["base_url"]:
            raise ConfigError("llm.provider = 'http' requires llm.base_url")
        provider = HttpChatProvider(llm["base_url"], api_key_env=llm["api_key_env"])
    else:
        raise ConfigError(f"unknown llm.provider: {llm['provider']}")
    cache_path = llm["cache_path"] or None
    return LlmClient(
        provider,
        cache=CompletionCache(cache_path),
        max_calls=llm["max_calls"] or None,
        requests_per_minute=llm["requests_per_minute"] or None,
    )


def _build_embeddings(cfg: RunConfig):
    section = cfg.section("consistency")
    if section["embedding"] == "hashing":
        return HashingEmbeddingProvider(dimension=section["embedding_dimension"])
    if section["embedding"] == "http":
        return HttpEmbeddingProvider(
            section["embedding_url"], dimension=section["embedding_dimension"]
        )
    raise ConfigError(f"unknown consistency.embedding: {section['embedding']}")


def _write_manifest(cfg: RunConfig, command: str, extra: dict | None = None) -> RunManifest:
    checksums = {}
    for name, path in cfg.datasets.items():
        if Path(path).exists():
            checksums[name] = checksum_file(path)
    llm = cfg.section("llm")
    manifest = RunManifest(
        config={**cfg.sections, "command": command, **(extra or {})},
        seeds={"run": cfg.seed},
        model_ids=[m for m in (llm["model"], llm["grader_model"]) if m],
        tau_grid=list(cfg.section("consistency")["tau_grid"]),
        dataset_checksums=checksums,
        decisions={
            "phase2_language": "same language and model as generation unless overridden",
            "indeterminate_verdicts": "counted as negative predictions",
        },
    )
    cfg.output_dir.mkdir(parents=True, exist_ok=True)
    manifest.save(cfg.output_dir / "manifest.json")
    return manifest


def _load_named_dataset(cfg: RunConfig, name: str, language: str):
    datasets = cfg.datasets
    if name not in datasets:
        raise ConfigError(f"dataset '{name}' not in config (have: {sorted(datasets)})")
    dataset = load_dataset(datasets[name])
    subset = [p for p in dataset if p.language == language]
    if not subset:
        raise ConfigError(f"dataset '{name}' has no rows in language '{language}'")
    from ..corpus import Dataset

    return Dataset(pairs=subset)


def _echo_budget(cfg: RunConfig, calls: int, note: str = "") -> None:
    max_calls = cfg.section("llm")["max_calls"]
    budget = f"{max_calls}" if max_calls else "unlimited"
    click.echo(f"planned provider calls: {calls}{note}; budget: {budget}")


pass_config = click.make_pass_decorator(RunConfig)


@click.group()
@click.option("--config", "config_path", required=True, type=click.Path(), help="TOML run config")
@click.pass_context
def main(ctx: click.Context, config_path: str) -> None:
    """Cross-lingual LLM evaluation harness."""
    try:
        ctx.obj = load_config(config_path)
    except ConfigError as exc:
        raise click.ClickException(str(exc)) from exc


# --- correctness -----------------------------------------------------------


@main.group()
def correctness() -> None:
    """Two-phase comparative grading pipeline."""


@correctness.command("run")
@click.option("--dataset", "dataset_name", required=True)
@click.option("--lang", required=True)
@click.option("--dry-run", is_flag=True)
@pass_config
def correctness_run(cfg: RunConfig, dataset_name: str, lang: str, dry_run: bool) -> None:
    try:
        data = _load_named_dataset(cfg, dataset_name, lang)
        click.echo(f"loaded {len(data)} questions ({dataset_name}, {lang})")
        if dry_run:
            _echo_budget(cfg, 2 * len(data), " (phase-1 + phase-2)")
            return
        _write_manifest(cfg, "correctness run", {"dataset": dataset_name, "lang": lang})
        client = _build_client(cfg)
        llm = cfg.section("llm")
        verdicts = run_correctness(
            data,
            client,
            llm["model"],
            lang,
            temperature=cfg.section("correctness")["temperature"],
            grader_model=llm["grader_model"] or None,
            max_tokens=llm["max_tokens"],
            workers=cfg.workers,
        )
        out = cfg.output_dir / f"verdicts_{dataset_name}_{lang}.jsonl"
        save_verdicts(verdicts, out)
        click.echo(f"wrote {len(verdicts)} verdicts to {out}")
    except (CrossevalError, OSError) as exc:
        raise click.ClickException(str(exc)) from exc


@correctness.command("aggregate")
@click.option("--dataset", "dataset_name", required=True)
@pass_config
def correctness_aggregate(cfg: RunConfig, dataset_name: str) -> None:
    try:
        manifest = _write_manifest(cfg, "correctness aggregate", {"dataset": dataset_name})
        verdicts = []
        languages = []
        for lang in cfg.languages:
            path = cfg.output_dir / f"verdicts_{dataset_name}_{lang}.jsonl"
            if not path.exists():
                raise ConfigError(f"missing verdicts file: {path}")
            verdicts.extend(load_verdicts(path))
            languages.append(lang)
        table = aggregate_labels(verdicts)
        out = cfg.output_dir / f"contingency_{dataset_name}.csv"
        export_contingency_csv([table], languages, manifest.hash, out)
        click.echo(f"wrote contingency table to {out}")
    except (CrossevalError, OSError) as exc:
        raise click.ClickException(str(exc)) from exc


@correctness.command("sample")
@click.option("--dataset", "dataset_name", required=True)
@click.option("--lang", required=True)
@click.option("--fraction", type=float, default=None)
@click.option("--seed", type=int, default=None)
@pass_config
def correctness_sample(cfg: RunConfig, dataset_name: str, lang: str,
                       fraction: float | None, seed: int | None) -> None:
    try:
        _write_manifest(cfg, "correctness sample", {"dataset": dataset_name, "lang": lang})
        fraction = fraction if fraction is not None else cfg.section("correctness")["fraction"]
        seed = seed if seed is not None else cfg.seed
        path = cfg.output_dir / f"verdicts_{dataset_name}_{lang}.jsonl"
        if not path.exists():
            raise ConfigError(f"missing verdicts file: {path}")
        verdicts = load_verdicts(path)
        batch_set = stratified_sample(
            verdicts, fraction, seed, n_batches=cfg.section("correctness")["n_batches"]
        )
        out = cfg.output_dir / f"batches_{dataset_name}_{lang}.json"
        payload = {
            "per_label_sizes": {
                label.value: size for label, size in batch_set.per_label_sizes.items()
            },
            "batches": [
                [v.to_record() for v in batch] for batch in batch_set.batches
            ],
        }
        out.write_text(json.dumps(payload, ensure_ascii=False, indent=2), encoding="utf-8")
        sizes = [len(b) for b in batch_set.batches]
        click.echo(f"sampled {batch_set.total} instances into batches of {sizes} -> {out}")
    except (CrossevalError, OSError) as exc:
        raise click.ClickException(str(exc)) from exc


# --- consistency -----------------------------------------------------------


@main.group()
def consistency() -> None:
    """K-sample agreement pipeline and its statistics."""


@consistency.command("run")
@click.option("--dataset", "dataset_name", required=True)
@click.option("--lang", required=True)
@click.option("--k", "k_samples", type=int, default=None)
@click.option("--tau", "tau_list", default=None, help="comma-separated temperatures")
@click.option("--dry-run", is_flag=True)
@pass_config
def consistency_run(cfg: RunConfig, dataset_name: str, lang: str,
                    k_samples: int | None, tau_list: str | None, dry_run: bool) -> None:
    try:
        section = cfg.section("consistency")
        k_samples = k_samples or section["k_samples"]
        taus = (
            [float(t) for t in tau_list.split(",")] if tau_list else list(section["tau_grid"])
        )
        data = _load_named_dataset(cfg, dataset_name, lang)
        if dry_run:
            _echo_budget(cfg, len(data) * k_samples * len(taus))
            return
        _write_manifest(cfg, "consistency run", {"dataset": dataset_name, "lang": lang})
        client = _build_client(cfg)
        embeddings = _build_embeddings(cfg)
        llm = cfg.section("llm")
        all_scores = []
        for tau in taus:
            all_scores.extend(
                evaluate_consistency(
                    data,
                    client,
                    llm["model"],
                    lang,
                    tau,
                    k_samples,
                    embeddings,
                    DEFAULT_IDENTIFIER,
                    seed=cfg.seed,
                    topic_iterations=section["topic_iterations"],
                    max_tokens=llm["max_tokens"],
                    workers=cfg.workers,
                )
            )
        out_csv = cfg.output_dir / f"consistency_{dataset_name}_{lang}.csv"
        out_jsonl = cfg.output_dir / f"consistency_{dataset_name}_{lang}.jsonl"
        save_scores_csv(all_scores, out_csv)
        save_scores_jsonl(all_scores, out_jsonl)
        click.echo(f"wrote {len(all_scores)} score rows to {out_csv}")
    except (CrossevalError, OSError) as exc:
        raise click.ClickException(str(exc)) from exc


@consistency.command("stats")
@click.option("--dataset", "dataset_name", required=True)
@click.option("--metric", required=True)
@click.option("--tau", type=float, required=True)
@click.option("--alpha", type=float, default=0.05)
@pass_config
def consistency_stats(cfg: RunConfig, dataset_name: str, metric: str,
                      tau: float, alpha: float) -> None:
    if metric not in SCORE_FIELDS:
        raise click.BadParameter(f"unknown metric '{metric}' (have: {', '.join(SCORE_FIELDS)})")
    try:
        manifest = _write_manifest(cfg, "consistency stats", {"dataset": dataset_name})
        groups = []
        for lang in cfg.languages:
            path = cfg.output_dir / f"consistency_{dataset_name}_{lang}.csv"
            if not path.exists():
                raise ConfigError(f"missing consistency scores: {path}")
            scores = [s for s in load_scores_csv(path) if s.temperature == tau]
            if not scores:
                raise ConfigError(f"no rows at tau={tau} in {path}")
            groups.append(SampleGroup(lang, [getattr(s, metric) for s in scores]))

        anova = one_way_anova(groups)
        click.echo(f"ANOVA {metric} tau={tau}: {format_statistic_pair(anova.statistic, anova.p_value)}")

        pair_rows = []
        for decision in tukey_hsd(groups, alpha=alpha):
            stars = significance_stars(decision.p_adjusted)
            pair_rows.append(
                [decision.group_a, decision.group_b, f"{decision.mean_diff:.4f}",
                 f"{decision.p_adjusted:.2e}", stars, "reject" if decision.reject else "keep"]
            )
            click.echo(
                f"  tukey {decision.group_a}-{decision.group_b}: "
                f"p={decision.p_adjusted:.2e}{stars}"
            )
        t_rows = []
        for i in range(len(groups)):
            for j in range(i + 1, len(groups)):
                res = unpaired_t_test(groups[i], groups[j])
                stars = significance_stars(res.p_value)
                t_rows.append(
                    [groups[i].label, groups[j].label, f"{res.statistic:.2f}",
                     f"{res.p_value:.2e}", stars]
                )
                click.echo(
                    f"  t-test {groups[i].label}-{groups[j].label}: "
                    f"{format_statistic_pair(res.statistic, res.p_value)}{stars}"
                )

        export_rows_csv(
            ["metric", "tau", "F", "p"],
            [[metric, tau, f"{anova.statistic:.2f}", f"{anova.p_value:.2e}"]],
            manifest.hash,
            cfg.output_dir / f"anova_{dataset_name}_{metric}_tau{tau}.csv",
        )
        export_rows_csv(
            ["group_a", "group_b", "mean_diff", "p_adjusted", "stars", "decision"],
            pair_rows,
            manifest.hash,
            cfg.output_dir / f"tukey_{dataset_name}_{metric}_tau{tau}.csv",
        )
        export_rows_csv(
            ["group_a", "group_b", "t", "p", "stars"],
            t_rows,
            manifest.hash,
            cfg.output_dir / f"ttest_{dataset_name}_{metric}_tau{tau}.csv",
        )
        click.echo("wrote anova/tukey/ttest tables")
    except (CrossevalError, OSError) as exc:
        raise click.ClickException(str(exc)) from exc


# --- verifiability ---------------------------------------------------------


@main.command("verifiability")
@click.option("--dataset", "dataset_name", required=True)
@click.option("--lang", required=True)
@click.option("--negatives", type=int, default=None)
@click.option("--dry-run", is_flag=True)
@pass_config
def verifiability_run(cfg: RunConfig, dataset_name: str, lang: str,
                      negatives: int | None, dry_run: bool) -> None:
    try:
        section = cfg.section("verifiability")
        negatives = negatives if negatives is not None else section["negatives_per_question"]
        data = _load_named_dataset(cfg, dataset_name, lang)
        instances = build_verifiability_instances(data, negatives, seed=cfg.seed)
        taus = list(section["tau_grid"])
        if dry_run:
            _echo_budget(cfg, len(instances) * len(taus))
            return
        manifest = _write_manifest(cfg, "verifiability run", {"dataset": dataset_name, "lang": lang})
        client = _build_client(cfg)
        llm = cfg.section("llm")
        run = evaluate_verifiability(
            instances, client, llm["model"], lang, taus,
            max_tokens=section["max_tokens"], workers=cfg.workers,
        )
        summary = run.summary()
        payload = {
            "language": lang,
            "taus": taus,
            "reports": {
                str(tau): {
                    name: getattr(run.reports[tau], name) for name in METRIC_FIELDS
                }
                for tau in taus
            },
            "summary": {name: s.formatted() for name, s in summary.items()},
        }
        out = cfg.output_dir / f"verifiability_{dataset_name}_{lang}.json"
        out.write_text(json.dumps(payload, indent=2, sort_keys=True), encoding="utf-8")
        matrix = heatmap_matrix({lang: run}, "accuracy")
        export_heatmap_json(
            matrix, manifest.hash,
            cfg.output_dir / f"heatmap_accuracy_{dataset_name}_{lang}.json",
        )
        export_heatmap_csv(
            matrix, manifest.hash,
            cfg.output_dir / f"heatmap_accuracy_{dataset_name}_{lang}.csv",
        )
        for name, s in summary.items():
            click.echo(f"{name}: {s.formatted()}")
        click.echo(f"wrote verifiability run to {out}")
    except (CrossevalError, OSError) as exc:
        raise click.ClickException(str(exc)) from exc


# --- annotation ------------------------------------------------------------


@main.group()
def annotate() -> None:
    """Human-validation batches and service."""


@annotate.command("make-batches")
@click.option("--dataset", "dataset_name", required=True)
@click.option("--lang", required=True)
@pass_config
def annotate_make_batches(cfg: RunConfig, dataset_name: str, lang: str) -> None:
    try:
        _write_manifest(cfg, "annotate make-batches", {"dataset": dataset_name, "lang": lang})
        path = cfg.output_dir / f"batches_{dataset_name}_{lang}.json"
        if not path.exists():
            raise ConfigError(f"missing batch file (run `correctness sample` first): {path}")
        payload = json.loads(path.read_text(encoding="utf-8"))
        questions = {
            p.id: p.question for p in _load_named_dataset(cfg, dataset_name, lang)
        }
        journal = cfg.section("annotate")["journal"] or str(cfg.output_dir / "annotations.jsonl")
        annotators = cfg.section("annotate")["annotators"] or ["annotator-1"]
        store = annotate_mod.AnnotationStore(journal)
        tokens_out = {}
        for b, batch in enumerate(payload["batches"], start=1):
            batch_id = f"{dataset_name}_{lang}_batch{b}"
            tasks = [
                annotate_mod.AnnotationTask(
                    task_id=f"{batch_id}_task{i}",
                    batch_id=batch_id,
                    language=lang,
                    question=questions.get(v["question_id"], v["question_id"]),
                    ground_truth=v["ground_truth"],
                    llm_answer=v["llm_answer"],
                    automated_reasoning=v["reasoning"],
                    automated_label=CorrectnessLabel(v["label"]),
                )
                for i, v in enumerate(batch, start=1)
            ]
            tokens_out[batch_id] = store.create_batch(batch_id, tasks, annotators)
        out = cfg.output_dir / f"annotator_tokens_{dataset_name}_{lang}.json"
        out.write_text(json.dumps(tokens_out, indent=2, sort_keys=True), encoding="utf-8")
        click.echo(f"created {len(tokens_out)} batches; tokens in {out}")
    except (CrossevalError, OSError) as exc:
        raise click.ClickException(str(exc)) from exc


@annotate.command("serve")
@pass_config
def annotate_serve(cfg: RunConfig) -> None:
    try:
        import uvicorn
    except ImportError as exc:
        raise click.ClickException("uvicorn not installed (pip install crosseval[serve])") from exc
    section = cfg.section("annotate")
    journal = section["journal"] or str(cfg.output_dir / "annotations.jsonl")
    store = annotate_mod.AnnotationStore(journal)
    app = annotate_mod.create_app(store)
    uvicorn.run(app, host=section["host"], port=section["port"])


@annotate.command("report")
@click.option("--batch", "batch_ids", multiple=True, required=True)
@pass_config
def annotate_report(cfg: RunConfig, batch_ids: tuple[str, ...]) -> None:
    try:
        section = cfg.section("annotate")
        journal = section["journal"] or str(cfg.output_dir / "annotations.jsonl")
        store = annotate_mod.AnnotationStore(journal)
        percentages = []
        for batch_id in batch_ids:
            report = store.batch_report(batch_id)
            percentages.append(report.correlation)
            click.echo(f"{batch_id}: correlation {report.correlation}% unanimity {report.unanimity}%")
        if len(percentages) > 1:
            click.echo(f"average correlation: {annotate_mod.average_percentages(percentages)}%")
    except (CrossevalError, OSError, KeyError) as exc:
        raise click.ClickException(str(exc)) from exc


if __name__ == "__main__":
    main(sys.argv[1:])
