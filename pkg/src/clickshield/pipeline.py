"""Training and evaluation orchestration: per-fold artifact fitting,
cross validation, and full-corpus bundle training."""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from . import features as feats
from .annotation import AnnotatedHeadline, AnnotationPipeline, train_parser, train_tagger
from .annotation.conllu import ConlluSentence
from .bayes import NaiveBayesModel, train_nb
from .corpus import FoldAssignment, Label, LabeledHeadline, Lexicon, stratified_folds
from .features import FEATURE_GROUPS, FEATURE_NAMES, extract_features, gram_multisets, restrict_to_pruned
from .metrics import Confusion, EvalReport, compute_metrics, confusion_counts
from .ngrams import PrunedNGramSet, prune
from .svm import svm_decision, train_svm_smo
from .trees import forest_decision, train_forest, train_tree, tree_decision

MODEL_KINDS = ("svm", "tree", "forest")


@dataclass
class TrainConfig:
    model: str = "svm"
    folds: int = 10
    seed: int = 0
    min_doc_freq: int = 5
    nb_alpha: float = 1.0
    svm_c: float = 1.0
    svm_gamma: float | None = None  # None -> 1 / (n_features * mean variance)
    svm_tol: float = 1e-3
    svm_max_passes: int = 10
    annotation_epochs: int = 5
    n_trees: int = 100
    min_leaf: int = 2
    max_depth: int | None = None


def decision_threshold(kind: str) -> float:
    return 0.0 if kind == "svm" else 0.5


def train_annotation(
    treebank: list[ConlluSentence], cfg: TrainConfig, version: int = 1
) -> AnnotationPipeline:
    tagger = train_tagger(treebank, epochs=cfg.annotation_epochs, seed=cfg.seed, version=version)
    parser = train_parser(treebank, epochs=cfg.annotation_epochs, seed=cfg.seed, version=version)
    return AnnotationPipeline(tagger, parser)


def annotate_corpus(
    corpus: list[LabeledHeadline], pipe: AnnotationPipeline
) -> list[AnnotatedHeadline]:
    return [pipe.annotate(h.id, h.text) for h in corpus]


@dataclass
class FoldArtifacts:
    nb_models: dict[str, NaiveBayesModel]
    pruned_sets: dict[str, PrunedNGramSet]


def fit_artifacts(
    anns: list[AnnotatedHeadline],
    labels: list[Label],
    cfg: TrainConfig,
) -> FoldArtifacts:
    """Fits pruned N-gram sets and all four NB scorers on (what must be)
    training-fold data only."""
    multisets = [gram_multisets(a) for a in anns]
    pruned_sets: dict[str, PrunedNGramSet] = {}
    nb_models: dict[str, NaiveBayesModel] = {}
    for family, n_min in (("word_ngram", 1), ("pos_ngram", 1), ("syn_ngram", 2)):
        per_headline = [
            (label, set(ms[family].keys())) for label, ms in zip(labels, multisets)
        ]
        pruned_sets[family] = prune(
            per_headline, cfg.min_doc_freq, kind=family, n_min=n_min, n_max=4
        )
        examples = [
            (label, restrict_to_pruned(ms[family], pruned_sets[family]))
            for label, ms in zip(labels, multisets)
        ]
        nb_models[family] = train_nb(family, examples, alpha=cfg.nb_alpha)
    nb_models["subject"] = train_nb(
        "subject",
        [(label, ms["subject"]) for label, ms in zip(labels, multisets)],
        alpha=cfg.nb_alpha,
    )
    return FoldArtifacts(nb_models=nb_models, pruned_sets=pruned_sets)


def feature_matrix(
    anns: list[AnnotatedHeadline],
    lexicons: dict[str, Lexicon],
    artifacts: FoldArtifacts,
    feature_names: list[str] | None = None,
) -> np.ndarray:
    rows = [
        extract_features(a, lexicons, artifacts.nb_models, artifacts.pruned_sets).as_list()
        for a in anns
    ]
    x = np.array(rows, dtype=float)
    if feature_names is not None:
        idx = [FEATURE_NAMES.index(n) for n in feature_names]
        x = x[:, idx]
    return x


def train_main(x: np.ndarray, labels01: np.ndarray, kind: str, cfg: TrainConfig):
    if kind == "svm":
        y = np.where(labels01 == 1, 1.0, -1.0)
        return train_svm_smo(
            x, y, C=cfg.svm_c, gamma=cfg.svm_gamma, tol=cfg.svm_tol,
            max_passes=cfg.svm_max_passes, seed=cfg.seed,
        )
    if kind == "tree":
        return train_tree(x, labels01, max_depth=cfg.max_depth, min_leaf=cfg.min_leaf)
    if kind == "forest":
        return train_forest(
            x, labels01, n_trees=cfg.n_trees, seed=cfg.seed,
            max_depth=cfg.max_depth, min_leaf=cfg.min_leaf,
        )
    raise ValueError(f"unknown model kind {kind!r}")


def decision_scores(kind: str, model, x: np.ndarray) -> np.ndarray:
    if kind == "svm":
        return svm_decision(model, x)
    if kind == "tree":
        return tree_decision(model, x)
    if kind == "forest":
        return forest_decision(model, x)
    raise ValueError(f"unknown model kind {kind!r}")


def cross_validate(
    corpus: list[LabeledHeadline],
    anns: list[AnnotatedHeadline],
    lexicons: dict[str, Lexicon],
    cfg: TrainConfig,
    feature_names: list[str] | None = None,
    folds: FoldAssignment | None = None,
) -> EvalReport:
    """k-fold CV; every learned artifact (pruned sets, NB models,
    standardization, classifier) is fit on the training fold only.
    The positive class is clickbait."""
    if folds is None:
        folds = stratified_folds(corpus, cfg.folds, cfg.seed)
    by_id = {h.id: (h, a) for h, a in zip(corpus, anns)}
    all_labels: list[int] = []
    all_scores: list[float] = []
    per_fold = []
    threshold = decision_threshold(cfg.model)
    total_confusion = Confusion()
    for fold in range(folds.k):
        test_ids = set(folds.fold_ids(fold))
        train_rows = [by_id[i] for i in sorted(by_id) if i not in test_ids]
        test_rows = [by_id[i] for i in sorted(test_ids)]
        artifacts = fit_artifacts(
            [a for _, a in train_rows], [h.label for h, _ in train_rows], cfg
        )
        x_train = feature_matrix([a for _, a in train_rows], lexicons, artifacts, feature_names)
        y_train = np.array([1 if h.label == Label.CLICKBAIT else 0 for h, _ in train_rows])
        model = train_main(x_train, y_train, cfg.model, cfg)
        x_test = feature_matrix([a for _, a in test_rows], lexicons, artifacts, feature_names)
        y_test = [1 if h.label == Label.CLICKBAIT else 0 for h, _ in test_rows]
        scores = decision_scores(cfg.model, model, x_test).tolist()
        fold_conf = confusion_counts(y_test, scores, threshold)
        total_confusion.add(fold_conf)
        per_fold.append(
            {
                "fold": fold,
                "n": len(y_test),
                "accuracy": (fold_conf.tp + fold_conf.tn) / len(y_test),
            }
        )
        all_labels.extend(y_test)
        all_scores.extend(scores)
    report = compute_metrics(all_labels, all_scores, threshold)
    report.per_fold = per_fold
    return report


def baseline_cross_validate(
    corpus: list[LabeledHeadline], rules: Lexicon
) -> EvalReport:
    """The fixed-rule baseline has nothing to fit, so CV reduces to one
    pass over the corpus."""
    labels = [1 if h.label == Label.CLICKBAIT else 0 for h in corpus]
    scores = [
        1.0 if feats.baseline_downworthy(h.text, rules) == Label.CLICKBAIT else 0.0
        for h in corpus
    ]
    return compute_metrics(labels, scores, threshold=0.5)


def table2_report(
    corpus: list[LabeledHeadline],
    anns: list[AnnotatedHeadline],
    lexicons: dict[str, Lexicon],
    rules: Lexicon,
    cfg: TrainConfig,
    model_kinds: tuple[str, ...] = MODEL_KINDS,
) -> dict[str, dict[str, EvalReport]]:
    """Rows: the four feature groups, all features, and the rule
    baseline; columns: one EvalReport per model kind."""
    folds = stratified_folds(corpus, cfg.folds, cfg.seed)
    out: dict[str, dict[str, EvalReport]] = {}
    rows: list[tuple[str, list[str] | None]] = [
        (group, names) for group, names in FEATURE_GROUPS.items()
    ]
    rows.append(("all_features", None))
    for row_name, names in rows:
        out[row_name] = {}
        for kind in model_kinds:
            row_cfg = replace(cfg, model=kind)
            out[row_name][kind] = cross_validate(
                corpus, anns, lexicons, row_cfg, feature_names=names, folds=folds
            )
    baseline = baseline_cross_validate(corpus, rules)
    out["downworthy_baseline"] = {kind: baseline for kind in model_kinds}
    return out
