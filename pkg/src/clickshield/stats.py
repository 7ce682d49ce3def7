"""Per-class comparative statistics over an annotated corpus."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import measures
from .annotation import AnnotatedHeadline
from .corpus import CorpusError, Label, LabeledHeadline, Lexicon


@dataclass
class ClassStats:
    n_headlines: int = 0
    mean_headline_words: float = 0.0
    mean_word_chars: float = 0.0
    stopword_fraction: float = 0.0
    contraction_headline_fraction: float = 0.0
    hyperbolic_headline_fraction: float = 0.0
    determiner_headline_fraction: float = 0.0
    dependency_distance_histogram: dict[int, int] = field(default_factory=dict)
    pos_tag_distribution: dict[str, float] = field(default_factory=dict)


@dataclass
class CorpusStats:
    per_class: dict[Label, ClassStats]


def compute_corpus_stats(
    corpus: list[LabeledHeadline],
    annotations: list[AnnotatedHeadline],
    lexicons: dict[str, Lexicon],
) -> CorpusStats:
    if len(corpus) != len(annotations) or any(
        h.id != a.id for h, a in zip(corpus, annotations)
    ):
        raise CorpusError("annotations are not aligned 1:1 with the corpus")
    stopwords = lexicons["stopwords"]
    hyperbolic = lexicons["hyperbolic"]
    determiners = lexicons["determiners"]

    per_class: dict[Label, ClassStats] = {}
    for label in Label:
        rows = [
            a for h, a in zip(corpus, annotations) if h.label == label
        ]
        stats = ClassStats(n_headlines=len(rows))
        if not rows:
            per_class[label] = stats
            continue
        word_lists = [measures.words(a) for a in rows]
        total_words = sum(len(ws) for ws in word_lists)
        stats.mean_headline_words = total_words / len(rows)
        stats.mean_word_chars = (
            sum(len(w) for ws in word_lists for w in ws) / total_words
            if total_words
            else 0.0
        )
        stop_total = sum(measures.stopword_counts(a, stopwords)[0] for a in rows)
        stats.stopword_fraction = stop_total / total_words if total_words else 0.0
        stats.contraction_headline_fraction = (
            sum(1 for a in rows if measures.contraction_count(a) > 0) / len(rows)
        )
        stats.hyperbolic_headline_fraction = (
            sum(measures.hyperbolic_present(a, hyperbolic) for a in rows) / len(rows)
        )
        stats.determiner_headline_fraction = (
            sum(1 for a in rows if measures.determiner_count(a, determiners) > 0)
            / len(rows)
        )
        hist: dict[int, int] = {}
        for a in rows:
            d = measures.max_dependency_distance(a)
            hist[d] = hist.get(d, 0) + 1
        stats.dependency_distance_histogram = dict(sorted(hist.items()))
        tag_counts: dict[str, int] = {}
        for a in rows:
            for tag in measures.pos_tags(a):
                tag_counts[tag] = tag_counts.get(tag, 0) + 1
        total_tags = sum(tag_counts.values())
        if total_tags:
            stats.pos_tag_distribution = {
                t: c / total_tags for t, c in sorted(tag_counts.items())
            }
        per_class[label] = stats
    return CorpusStats(per_class=per_class)


def stats_rows(stats: CorpusStats) -> list[tuple[str, str, str]]:
    """(measure, class, value) rows for the table / CSV report."""
    rows = []
    for label, cls in stats.per_class.items():
        name = label.value
        if cls.n_headlines == 0:
            rows.append(("n_headlines", name, "n/a"))
            continue
        rows.append(("n_headlines", name, str(cls.n_headlines)))
        rows.append(("mean_headline_words", name, f"{cls.mean_headline_words:.3f}"))
        rows.append(("mean_word_chars", name, f"{cls.mean_word_chars:.3f}"))
        rows.append(("stopword_fraction", name, f"{cls.stopword_fraction:.4f}"))
        rows.append(
            ("contraction_headline_fraction", name, f"{cls.contraction_headline_fraction:.4f}")
        )
        rows.append(
            ("hyperbolic_headline_fraction", name, f"{cls.hyperbolic_headline_fraction:.4f}")
        )
        rows.append(
            ("determiner_headline_fraction", name, f"{cls.determiner_headline_fraction:.4f}")
        )
    return rows
