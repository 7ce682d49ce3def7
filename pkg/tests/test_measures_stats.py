import pytest

from clickshield import measures
from clickshield.corpus import CorpusError, Label, LabeledHeadline, Lexicon
from clickshield.stats import compute_corpus_stats, stats_rows


def ann(pipeline, text):
    return pipeline.annotate(0, text)


def test_birds_fly_measures(annotation_pipeline, lexicons):
    a = ann(annotation_pipeline, "Birds fly")
    assert measures.num_words(a) == 2
    assert measures.max_dependency_distance(a) == 1
    assert measures.contraction_count(a) == 0
    assert measures.stopword_counts(a, lexicons["stopwords"])[0] == 0


def test_stop_to_content_ratio_degenerate(annotation_pipeline, lexicons):
    # all-stopword headline: denominator clamps to 1, ratio = stop count
    a = ann(annotation_pipeline, "You are the")
    stops, content = measures.stopword_counts(a, lexicons["stopwords"])
    assert content == 0
    assert measures.stop_to_content_ratio(a, lexicons["stopwords"]) == stops


def test_starts_with_cardinal(annotation_pipeline):
    assert measures.starts_with_cardinal(
        ann(annotation_pipeline,
            "15 Things That Happen When Your Best Friend Is Obsessed With FIFA")) == 1
    assert measures.starts_with_cardinal(ann(annotation_pipeline, "Birds fly")) == 0


def test_unusual_punct(annotation_pipeline):
    assert measures.unusual_punct_count(ann(annotation_pipeline, "What?! No way...")) == 2
    assert measures.unusual_punct_count(ann(annotation_pipeline, "Plain headline.")) == 0


def test_contraction_count(annotation_pipeline):
    a = ann(annotation_pipeline, "You Won't Believe They're Here")
    assert measures.contraction_count(a) == 2


def test_hyperbolic_and_phrases(annotation_pipeline, lexicons):
    a = ann(annotation_pipeline,
            "They Said She Had Cancer. What Happens Next Will Blow Your Mind")
    assert measures.clickbait_phrase_count(a, lexicons["clickbait_phrases"]) >= 1
    b = ann(annotation_pipeline, "This Gut-Wrenching Reaction Is Amazing")
    assert measures.hyperbolic_present(b, lexicons["hyperbolic"]) == 1


def test_corpus_stats_alignment_fatal(sample_corpus, sample_annotations, lexicons):
    with pytest.raises(CorpusError):
        compute_corpus_stats(sample_corpus, sample_annotations[1:], lexicons)


def test_corpus_stats_single_headline(annotation_pipeline, lexicons):
    corpus = [LabeledHeadline(id=0, text="Birds fly", label=Label.NEWS)]
    anns = [annotation_pipeline.annotate(0, "Birds fly")]
    stats = compute_corpus_stats(corpus, anns, lexicons)
    news = stats.per_class[Label.NEWS]
    assert news.mean_headline_words == 2
    assert news.stopword_fraction == 0
    assert stats.per_class[Label.CLICKBAIT].n_headlines == 0


def test_label_swap_swaps_stats(sample_corpus, sample_annotations, lexicons):
    swapped = [
        LabeledHeadline(
            id=h.id, text=h.text,
            label=Label.NEWS if h.label == Label.CLICKBAIT else Label.CLICKBAIT,
            source=h.source)
        for h in sample_corpus
    ]
    a = compute_corpus_stats(sample_corpus, sample_annotations, lexicons)
    b = compute_corpus_stats(swapped, sample_annotations, lexicons)
    assert a.per_class[Label.CLICKBAIT] == b.per_class[Label.NEWS]
    assert a.per_class[Label.NEWS] == b.per_class[Label.CLICKBAIT]


def test_pos_distribution_sums_to_one(sample_corpus, sample_annotations, lexicons):
    stats = compute_corpus_stats(sample_corpus, sample_annotations, lexicons)
    for cls in stats.per_class.values():
        if cls.pos_tag_distribution:
            assert abs(sum(cls.pos_tag_distribution.values()) - 1.0) < 1e-9


def test_stats_rows_absent_class_na(annotation_pipeline, lexicons):
    corpus = [LabeledHeadline(id=0, text="Birds fly", label=Label.NEWS)]
    anns = [annotation_pipeline.annotate(0, "Birds fly")]
    rows = stats_rows(compute_corpus_stats(corpus, anns, lexicons))
    assert ("n_headlines", "clickbait", "n/a") in rows
