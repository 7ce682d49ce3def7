"""The 15-feature vector fed to the main classifier, plus the
fixed-rule phrase baseline."""

from __future__ import annotations

from dataclasses import dataclass, fields

from . import measures
from .annotation import AnnotatedHeadline
from .bayes import NaiveBayesModel, score_nb
from .corpus import Label, Lexicon
from .ngrams import (
    extract_pos_ngrams,
    extract_subject,
    extract_syntactic_ngrams,
    extract_word_ngrams,
)
from collections import Counter

FEATURE_NAMES = [
    "num_words",
    "avg_word_chars",
    "stop_to_content_ratio",
    "max_dependency_distance",
    "starts_with_cardinal",
    "unusual_punct_count",
    "contraction_count",
    "hyperbolic_present",
    "clickbait_phrase_count",
    "slang_count",
    "determiner_count",
    "subject_nb_score",
    "word_ngram_nb_score",
    "pos_ngram_nb_score",
    "syn_ngram_nb_score",
]

FEATURE_GROUPS = {
    "sentence_structure": [
        "num_words",
        "avg_word_chars",
        "stop_to_content_ratio",
        "max_dependency_distance",
    ],
    "word_patterns": [
        "starts_with_cardinal",
        "unusual_punct_count",
        "contraction_count",
    ],
    "clickbait_language": [
        "hyperbolic_present",
        "clickbait_phrase_count",
        "slang_count",
        "determiner_count",
        "subject_nb_score",
    ],
    "ngram_features": [
        "word_ngram_nb_score",
        "pos_ngram_nb_score",
        "syn_ngram_nb_score",
    ],
}


@dataclass
class FeatureVector:
    num_words: int
    avg_word_chars: float
    stop_to_content_ratio: float
    max_dependency_distance: int
    starts_with_cardinal: int
    unusual_punct_count: int
    contraction_count: int
    hyperbolic_present: int
    clickbait_phrase_count: int
    slang_count: int
    determiner_count: int
    subject_nb_score: float
    word_ngram_nb_score: float
    pos_ngram_nb_score: float
    syn_ngram_nb_score: float

    def as_list(self) -> list[float]:
        return [float(getattr(self, name)) for name in FEATURE_NAMES]


def gram_multisets(ann: AnnotatedHeadline) -> dict[str, Counter]:
    return {
        "subject": Counter([extract_subject(ann)]),
        "word_ngram": extract_word_ngrams(ann),
        "pos_ngram": extract_pos_ngrams(ann),
        "syn_ngram": extract_syntactic_ngrams(ann),
    }


def restrict_to_pruned(items: Counter, pruned) -> Counter:
    return Counter({g: c for g, c in items.items() if g in pruned})


def extract_features(
    ann: AnnotatedHeadline,
    lexicons: dict[str, Lexicon],
    nb_models: dict[str, NaiveBayesModel],
    pruned_sets: dict[str, "object"] | None = None,
) -> FeatureVector:
    multisets = gram_multisets(ann)
    if pruned_sets:
        for family in ("word_ngram", "pos_ngram", "syn_ngram"):
            if family in pruned_sets:
                multisets[family] = restrict_to_pruned(
                    multisets[family], pruned_sets[family]
                )
    return FeatureVector(
        num_words=measures.num_words(ann),
        avg_word_chars=measures.avg_word_chars(ann),
        stop_to_content_ratio=measures.stop_to_content_ratio(ann, lexicons["stopwords"]),
        max_dependency_distance=measures.max_dependency_distance(ann),
        starts_with_cardinal=measures.starts_with_cardinal(ann),
        unusual_punct_count=measures.unusual_punct_count(ann),
        contraction_count=measures.contraction_count(ann),
        hyperbolic_present=measures.hyperbolic_present(ann, lexicons["hyperbolic"]),
        clickbait_phrase_count=measures.clickbait_phrase_count(
            ann, lexicons["clickbait_phrases"]
        ),
        slang_count=measures.slang_count(ann, lexicons["slang"]),
        determiner_count=measures.determiner_count(ann, lexicons["determiners"]),
        subject_nb_score=score_nb(nb_models["subject"], multisets["subject"]),
        word_ngram_nb_score=score_nb(nb_models["word_ngram"], multisets["word_ngram"]),
        pos_ngram_nb_score=score_nb(nb_models["pos_ngram"], multisets["pos_ngram"]),
        syn_ngram_nb_score=score_nb(nb_models["syn_ngram"], multisets["syn_ngram"]),
    )


def baseline_downworthy(text: str, rules: Lexicon) -> Label:
    """Clickbait iff any fixed rule phrase matches case-insensitively."""
    low = " ".join(text.lower().split())
    for phrase in rules.entries:
        if phrase in low:
            return Label.CLICKBAIT
    return Label.NEWS
