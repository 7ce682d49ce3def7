"""Versioned model bundle: one self-contained file holding the
annotation models, NB scorers, pruned gram sets, the main classifier,
and the hashes of the lexicons it was trained with.

Serialization is canonical (sorted keys, fixed separators) so the same
inputs and seed always produce a byte-identical bundle.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import asdict, dataclass

import numpy as np

from .annotation import AnnotatedHeadline, AnnotationPipeline
from .annotation.conllu import ConlluSentence
from .annotation.parser import ParserModel
from .annotation.tagger import TaggerModel
from .bayes import NaiveBayesModel
from .corpus import Label, LabeledHeadline, Lexicon
from .ngrams import PrunedNGramSet
from .pipeline import (
    FoldArtifacts,
    TrainConfig,
    annotate_corpus,
    decision_scores,
    decision_threshold,
    feature_matrix,
    fit_artifacts,
    train_annotation,
    train_main,
)
from .svm import SvmModel
from .trees import ForestModel, TreeModel

FORMAT_VERSION = 1


class BundleError(Exception):
    pass


def corpus_hash(corpus: list[LabeledHeadline]) -> str:
    h = hashlib.sha256()
    for item in corpus:
        h.update(f"{item.id}\t{item.label.value}\t{item.text}\n".encode("utf-8"))
    return h.hexdigest()


def lexicon_hash(lex: Lexicon) -> str:
    h = hashlib.sha256()
    for entry in sorted(lex.entries):
        h.update(entry.encode("utf-8") + b"\n")
    return h.hexdigest()


_CLASSIFIER_TYPES = {"svm": SvmModel, "tree": TreeModel, "forest": ForestModel}


@dataclass
class ModelBundle:
    model_version: int
    config: TrainConfig
    corpus_fingerprint: str
    lexicon_hashes: dict[str, str]
    tagger: TaggerModel
    parser: ParserModel
    nb_models: dict[str, NaiveBayesModel]
    pruned_sets: dict[str, PrunedNGramSet]
    classifier_kind: str
    classifier: object

    def to_dict(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "model_version": self.model_version,
            "config": asdict(self.config),
            "corpus_fingerprint": self.corpus_fingerprint,
            "lexicon_hashes": dict(sorted(self.lexicon_hashes.items())),
            "tagger": self.tagger.to_dict(),
            "parser": self.parser.to_dict(),
            "nb_models": {k: m.to_dict() for k, m in sorted(self.nb_models.items())},
            "pruned_sets": {k: s.to_dict() for k, s in sorted(self.pruned_sets.items())},
            "classifier_kind": self.classifier_kind,
            "classifier": self.classifier.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ModelBundle":
        if data.get("format_version") != FORMAT_VERSION:
            raise BundleError(
                f"unsupported bundle format {data.get('format_version')!r}"
            )
        kind = data["classifier_kind"]
        if kind not in _CLASSIFIER_TYPES:
            raise BundleError(f"unknown classifier kind {kind!r}")
        return cls(
            model_version=data["model_version"],
            config=TrainConfig(**data["config"]),
            corpus_fingerprint=data["corpus_fingerprint"],
            lexicon_hashes=data["lexicon_hashes"],
            tagger=TaggerModel.from_dict(data["tagger"]),
            parser=ParserModel.from_dict(data["parser"]),
            nb_models={
                k: NaiveBayesModel.from_dict(v) for k, v in data["nb_models"].items()
            },
            pruned_sets={
                k: PrunedNGramSet.from_dict(v) for k, v in data["pruned_sets"].items()
            },
            classifier_kind=kind,
            classifier=_CLASSIFIER_TYPES[kind].from_dict(data["classifier"]),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    def save(self, path: str) -> None:
        payload = self.to_json().encode("utf-8")
        directory = os.path.dirname(os.path.abspath(path))
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".bundle-")
        try:
            with os.fdopen(fd, "wb") as fh:
                fh.write(payload)
                fh.flush()
                os.fsync(fh.fileno())
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    @classmethod
    def load(cls, path: str) -> "ModelBundle":
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise BundleError(f"cannot read bundle {path}: {exc}") from exc
        return cls.from_dict(data)

    def annotation_pipeline(self) -> AnnotationPipeline:
        return AnnotationPipeline(self.tagger, self.parser)

    def artifacts(self) -> FoldArtifacts:
        return FoldArtifacts(nb_models=self.nb_models, pruned_sets=self.pruned_sets)

    def classify_annotated(
        self, ann: AnnotatedHeadline, lexicons: dict[str, Lexicon]
    ) -> tuple[Label, float]:
        x = feature_matrix([ann], lexicons, self.artifacts())
        score = float(decision_scores(self.classifier_kind, self.classifier, x)[0])
        threshold = decision_threshold(self.classifier_kind)
        label = Label.CLICKBAIT if score > threshold else Label.NEWS
        return label, score


def train_bundle(
    corpus: list[LabeledHeadline],
    treebank: list[ConlluSentence],
    lexicons: dict[str, Lexicon],
    cfg: TrainConfig,
    model_version: int = 1,
    pipe: AnnotationPipeline | None = None,
    anns: list[AnnotatedHeadline] | None = None,
) -> ModelBundle:
    """Full training on the whole corpus. Pass a pre-trained annotation
    pipeline (and optionally annotations) to skip retraining it."""
    if pipe is None:
        pipe = train_annotation(treebank, cfg, version=model_version)
    if anns is None:
        anns = annotate_corpus(corpus, pipe)
    labels = [h.label for h in corpus]
    artifacts = fit_artifacts(anns, labels, cfg)
    x = feature_matrix(anns, lexicons, artifacts)
    y = np.array([1 if lab == Label.CLICKBAIT else 0 for lab in labels])
    classifier = train_main(x, y, cfg.model, cfg)
    return ModelBundle(
        model_version=model_version,
        config=cfg,
        corpus_fingerprint=corpus_hash(corpus),
        lexicon_hashes={name: lexicon_hash(lex) for name, lex in lexicons.items()},
        tagger=pipe.tagger,
        parser=pipe.parser,
        nb_models=artifacts.nb_models,
        pruned_sets=artifacts.pruned_sets,
        classifier_kind=cfg.model,
        classifier=classifier,
    )
