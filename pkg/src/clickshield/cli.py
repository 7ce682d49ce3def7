"""Operator command line: train, eval, classify, stats, simulate-block,
and serve.

Config is a single key=value file plus flag overrides; flags win over
the config file, which wins over defaults.

Exit codes: 0 success, 1 usage error, 2 data error, 3 training failure.

CSV column orders (fixed):
- eval:            row,model,accuracy,precision,recall,f1,roc_auc
- stats:           measure,class,value
- simulate-block:  method,n,accuracy,precision,recall,f1
"""

from __future__ import annotations

import hashlib
import json
import sys
from dataclasses import replace
from pathlib import Path

import click

from .annotation.conllu import load_conllu
from .blocker import (
    Action,
    ConceptGraphError,
    Decision,
    build_nugget,
    extract_tags,
    hybrid_decision,
    load_concept_graph,
    normalize_pattern,
    pattern_decision,
    topic_decision,
    update_profile,
)
from .blocker.profiles import UserProfile
from .bundle import BundleError, ModelBundle, train_bundle
from .corpus import (
    CorpusError,
    Label,
    bundled_data_path,
    load_bundled_lexicons,
    load_corpus,
    load_lexicon,
)
from .metrics import MetricsError
from .pipeline import MODEL_KINDS, TrainConfig, annotate_corpus, table2_report, train_annotation
from .stats import compute_corpus_stats, stats_rows

ROW_TITLES = {
    "sentence_structure": "Sentence Structure",
    "word_patterns": "Word Patterns",
    "clickbait_language": "Clickbait Language",
    "ngram_features": "N-gram Features",
    "all_features": "All Features",
    "downworthy_baseline": "Downworthy baseline",
}


class TrainingFailure(Exception):
    pass


def _parse_config_file(path: str | None) -> dict[str, str]:
    if not path:
        return {}
    settings = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CorpusError(f"cannot read config {path}: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise click.UsageError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        settings[key.strip()] = value.strip()
    return settings


class Settings:
    def __init__(self, config_path: str | None):
        self.file = _parse_config_file(config_path)

    def get(self, key: str, flag_value, default=None, cast=None):
        if flag_value is not None:
            return flag_value
        if key in self.file:
            value = self.file[key]
            return cast(value) if cast else value
        return default


def _train_config(settings: Settings, model, folds, seed, min_doc_freq) -> TrainConfig:
    return TrainConfig(
        model=settings.get("model", model, "svm"),
        folds=settings.get("folds", folds, 10, int),
        seed=settings.get("seed", seed, 0, int),
        min_doc_freq=settings.get("min_doc_freq", min_doc_freq, 5, int),
    )


def _load_corpus(settings: Settings, corpus_flag) -> list:
    path = settings.get(
        "corpus", corpus_flag, str(bundled_data_path("sample_corpus.jsonl"))
    )
    fmt = "tsv" if str(path).endswith((".tsv", ".txt")) else "jsonl"
    result = load_corpus(path, fmt)
    for err in result.errors:
        click.echo(f"warning: {err}", err=True)
    if not result.headlines:
        raise CorpusError(f"no usable headlines in {path}")
    return result.headlines


def _load_treebank(settings: Settings, treebank_flag):
    path = settings.get("treebank", treebank_flag, str(bundled_data_path("treebank.conllu")))
    sentences, skipped = load_conllu(path)
    if skipped:
        click.echo(f"warning: skipped {skipped} malformed treebank blocks", err=True)
    if not sentences:
        raise CorpusError(f"no usable sentences in treebank {path}")
    return sentences


def _echo_table(headers: list[str], rows: list[list[str]]) -> None:
    widths = [
        max(len(headers[i]), *(len(r[i]) for r in rows)) if rows else len(headers[i])
        for i in range(len(headers))
    ]
    line = "  ".join(h.ljust(w) for h, w in zip(headers, widths))
    click.echo(line)
    click.echo("  ".join("-" * w for w in widths))
    for row in rows:
        click.echo("  ".join(c.ljust(w) for c, w in zip(row, widths)))


@click.group()
@click.option("--config", "config_path", type=click.Path(), default=None,
              help="key=value config file; flags override it")
@click.pass_context
def cli(ctx, config_path):
    """Clickbait classification, evaluation, and blocking toolkit."""
    ctx.obj = Settings(config_path)


@cli.command()
@click.option("--corpus", default=None, type=click.Path())
@click.option("--treebank", default=None, type=click.Path())
@click.option("--bundle", "out_path", required=True, type=click.Path())
@click.option("--model", default=None, type=click.Choice(MODEL_KINDS))
@click.option("--folds", default=None, type=int)
@click.option("--seed", default=None, type=int)
@click.option("--min-doc-freq", default=None, type=int)
@click.pass_obj
def train(settings, corpus, treebank, out_path, model, folds, seed, min_doc_freq):
    """Train all models and write one bundle file."""
    cfg = _train_config(settings, model, folds, seed, min_doc_freq)
    headlines = _load_corpus(settings, corpus)
    sentences = _load_treebank(settings, treebank)
    lexicons = load_bundled_lexicons()
    try:
        bundle = train_bundle(headlines, sentences, lexicons, cfg)
        bundle.save(out_path)
    except (CorpusError, BundleError):
        raise
    except Exception as exc:
        raise TrainingFailure(str(exc)) from exc
    digest = hashlib.sha256(Path(out_path).read_bytes()).hexdigest()
    click.echo(f"trained {cfg.model} on {len(headlines)} headlines")
    click.echo(f"bundle {out_path} sha256 {digest}")


@cli.command("eval")
@click.option("--corpus", default=None, type=click.Path())
@click.option("--treebank", default=None, type=click.Path())
@click.option("--model", default=None, type=click.Choice(MODEL_KINDS),
              help="restrict to one model kind (default: all)")
@click.option("--folds", default=None, type=int)
@click.option("--seed", default=None, type=int)
@click.option("--min-doc-freq", default=None, type=int)
@click.pass_obj
def eval_cmd(settings, corpus, treebank, model, folds, seed, min_doc_freq):
    """Cross-validated report: one row per feature group plus
    all-features and the fixed-rule baseline."""
    cfg = _train_config(settings, model, folds, seed, min_doc_freq)
    headlines = _load_corpus(settings, corpus)
    sentences = _load_treebank(settings, treebank)
    lexicons = load_bundled_lexicons()
    rules = load_lexicon(bundled_data_path("downworthy_rules.txt"), "downworthy_rules")
    kinds = (cfg.model,) if model or "model" in settings.file else MODEL_KINDS
    try:
        pipe = train_annotation(sentences, cfg)
        anns = annotate_corpus(headlines, pipe)
        report = table2_report(headlines, anns, lexicons, rules, cfg, model_kinds=kinds)
    except (CorpusError, MetricsError):
        raise
    except Exception as exc:
        raise TrainingFailure(str(exc)) from exc
    headers = ["row", "model", "accuracy", "precision", "recall", "f1", "roc_auc"]
    rows = []
    for row_name, by_kind in report.items():
        for kind in kinds:
            r = by_kind[kind]
            rows.append([
                ROW_TITLES[row_name], kind,
                f"{r.accuracy:.4f}", f"{r.precision:.4f}", f"{r.recall:.4f}",
                f"{r.f1:.4f}", f"{r.roc_auc:.4f}",
            ])
    _echo_table(headers, rows)
    click.echo("")
    click.echo(",".join(headers))
    for row in rows:
        click.echo(",".join(row))


@cli.command()
@click.option("--bundle", "bundle_path", required=True, type=click.Path())
@click.argument("text", required=False)
@click.option("--file", "file_path", default=None,
              help="file of headlines, one per line; '-' reads stdin")
@click.pass_obj
def classify(settings, bundle_path, text, file_path):
    """Print one label per input headline."""
    bundle = ModelBundle.load(settings.get("bundle", bundle_path))
    lexicons = load_bundled_lexicons()
    if text is not None:
        lines = [text]
    elif file_path == "-" or file_path is None:
        lines = [line.rstrip("\n") for line in sys.stdin]
    else:
        try:
            lines = Path(file_path).read_text(encoding="utf-8").splitlines()
        except OSError as exc:
            raise CorpusError(f"cannot read {file_path}: {exc}") from exc
    pipe = bundle.annotation_pipeline()
    for line in lines:
        if not line.strip():
            continue
        ann = pipe.annotate(0, line)
        label, _ = bundle.classify_annotated(ann, lexicons)
        click.echo(label.value)


@cli.command()
@click.option("--corpus", default=None, type=click.Path())
@click.option("--treebank", default=None, type=click.Path())
@click.option("--seed", default=None, type=int)
@click.pass_obj
def stats(settings, corpus, treebank, seed):
    """Per-class corpus statistics with direction flags."""
    cfg = _train_config(settings, None, None, seed, None)
    headlines = _load_corpus(settings, corpus)
    sentences = _load_treebank(settings, treebank)
    lexicons = load_bundled_lexicons()
    pipe = train_annotation(sentences, cfg)
    anns = annotate_corpus(headlines, pipe)
    corpus_stats = compute_corpus_stats(headlines, anns, lexicons)
    rows = [list(r) for r in stats_rows(corpus_stats)]
    _echo_table(["measure", "class", "value"], rows)
    click.echo("")
    click.echo("measure,class,value")
    for row in rows:
        click.echo(",".join(row))
    cb = corpus_stats.per_class.get(Label.CLICKBAIT)
    news = corpus_stats.per_class.get(Label.NEWS)
    click.echo("")
    if not cb or not news or cb.n_headlines == 0 or news.n_headlines == 0:
        click.echo("direction checks: n/a (need both classes)")
        return
    checks = [
        ("clickbait headlines longer", cb.mean_headline_words > news.mean_headline_words),
        ("clickbait words shorter", cb.mean_word_chars < news.mean_word_chars),
        ("clickbait more stopwords", cb.stopword_fraction > news.stopword_fraction),
        ("clickbait more contractions",
         cb.contraction_headline_fraction > news.contraction_headline_fraction),
    ]
    for name, ok in checks:
        click.echo(f"direction: {name}: {'pass' if ok else 'FAIL'}")


@cli.command("simulate-block")
@click.argument("events_file", type=click.Path())
@click.option("--method", default=None,
              type=click.Choice(["pattern", "topic", "hybrid"]),
              help="restrict to one method (default: all three)")
@click.option("--holdout", default=0.2, type=float, show_default=True,
              help="fraction of each user's most recent events held out")
@click.option("--treebank", default=None, type=click.Path())
@click.option("--seed", default=None, type=int)
@click.pass_obj
def simulate_block(settings, events_file, method, holdout, treebank, seed):
    """Replay profile events and score blocking decisions on the
    held-out tail of each user's history.

    Events file: JSON-Lines with user, timestamp (ms), headline,
    action (clicked|blocked), optional link.
    """
    if not 0 < holdout < 1:
        raise click.UsageError("--holdout must be in (0, 1)")
    try:
        raw = Path(events_file).read_text(encoding="utf-8")
    except OSError as exc:
        raise CorpusError(f"cannot read {events_file}: {exc}") from exc
    events: dict[str, list[dict]] = {}
    for lineno, line in enumerate(raw.splitlines(), 1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
            user = rec["user"]
            rec["action"] = Action(rec["action"])
            rec["timestamp"] = int(rec["timestamp"])
            rec["headline"] = str(rec["headline"])
        except (json.JSONDecodeError, KeyError, ValueError) as exc:
            raise CorpusError(f"{events_file}:{lineno}: bad event: {exc}") from exc
        events.setdefault(user, []).append(rec)
    methods = [method] if method else ["pattern", "topic", "hybrid"]
    headers = ["method", "n", "accuracy", "precision", "recall", "f1"]
    if not events:
        _echo_table(headers, [])
        click.echo("")
        click.echo(",".join(headers))
        return
    cfg = _train_config(settings, None, None, seed, None)
    sentences = _load_treebank(settings, treebank)
    lexicons = load_bundled_lexicons()
    graph = load_concept_graph(str(bundled_data_path("concept_graph.txt")))
    pipe = train_annotation(sentences, cfg)
    annotated: dict[str, tuple] = {}

    def prep(headline: str):
        if headline not in annotated:
            ann = pipe.annotate(0, headline)
            annotated[headline] = (
                normalize_pattern(ann, lexicons["common200"]),
                set(extract_tags(ann)),
            )
        return annotated[headline]

    rows = []
    csv_rows = []
    for m in methods:
        tp = fp = tn = fn = 0
        for user, recs in sorted(events.items()):
            recs = sorted(recs, key=lambda r: (r["timestamp"], r["headline"]))
            split = len(recs) - max(1, int(round(holdout * len(recs))))
            profile = UserProfile(user_id=user)
            for rec in recs[:split]:
                pattern, tags = prep(rec["headline"])
                update_profile(
                    profile, rec.get("link", rec["headline"]), rec["headline"],
                    rec["action"], tags, rec["timestamp"], pattern, graph=graph,
                )
            for rec in recs[split:]:
                pattern, tags = prep(rec["headline"])
                if m == "pattern":
                    decision = pattern_decision(pattern, profile)
                elif m == "topic":
                    decision = topic_decision(build_nugget(tags, graph), profile)
                else:
                    decision = hybrid_decision(pattern, build_nugget(tags, graph), profile)
                predicted_block = decision.decision == Decision.BLOCK
                actual_block = rec["action"] == Action.BLOCKED
                if predicted_block and actual_block:
                    tp += 1
                elif predicted_block:
                    fp += 1
                elif actual_block:
                    fn += 1
                else:
                    tn += 1
        n = tp + fp + tn + fn
        acc = (tp + tn) / n if n else 0.0
        prec = tp / (tp + fp) if tp + fp else 0.0
        rec_ = tp / (tp + fn) if tp + fn else 0.0
        f1 = 2 * prec * rec_ / (prec + rec_) if prec + rec_ else 0.0
        rows.append([m, str(n), f"{acc:.4f}", f"{prec:.4f}", f"{rec_:.4f}", f"{f1:.4f}"])
        csv_rows.append(rows[-1])
    _echo_table(headers, rows)
    click.echo("")
    click.echo(",".join(headers))
    for row in csv_rows:
        click.echo(",".join(row))


@cli.command()
@click.option("--bundle", "bundle_path", required=True, type=click.Path())
@click.option("--listen", default=None, help="host:port (default 127.0.0.1:8300)")
@click.option("--method", default=None,
              type=click.Choice(["pattern", "topic", "hybrid"]))
@click.option("--event-log", default=None, type=click.Path())
@click.option("--corpus", default=None, type=click.Path())
@click.pass_obj
def serve(settings, bundle_path, listen, method, event_log, corpus):
    """Run the HTTP service."""
    import uvicorn

    from .service import ServiceConfig, build_service

    listen = settings.get("listen", listen, "127.0.0.1:8300")
    host, _, port = listen.rpartition(":")
    if not host or not port.isdigit():
        raise click.UsageError(f"--listen must be host:port, got {listen!r}")
    config = ServiceConfig(
        bundle_path=settings.get("bundle", bundle_path),
        event_log_path=settings.get(
            "event_log", event_log, str(Path(bundle_path).with_suffix(".events.jsonl"))
        ),
        corpus_path=settings.get("corpus", corpus),
        method=settings.get("method", method, "pattern"),
    )
    app = build_service(config)
    uvicorn.run(app, host=host, port=int(port))


def main() -> int:
    try:
        cli(standalone_mode=False)
        return 0
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return 1
    except click.UsageError as exc:
        click.echo(f"usage error: {exc.format_message()}", err=True)
        return 1
    except (CorpusError, BundleError, MetricsError, ConceptGraphError) as exc:
        click.echo(f"data error: {exc}", err=True)
        return 2
    except TrainingFailure as exc:
        click.echo(f"training failure: {exc}", err=True)
        return 3
    except click.ClickException as exc:
        exc.show()
        return 1


if __name__ == "__main__":
    sys.exit(main())
