import string

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clickshield import measures
from clickshield.annotation import ROOT, AnnotationPipeline, train_parser, train_tagger
from clickshield.annotation.tagger import PENN_TAGS, tag_words
from clickshield.pipeline import TrainConfig, train_annotation

LONG_HEADLINE = (
    "A 22-Year-Old Whose Husband And Baby Were Killed By A Drunk Driver "
    "Has Posted A Heartbreaking Facebook Plea"
)


@pytest.fixture(scope="module")
def held_out_split(treebank):
    test = [s for i, s in enumerate(treebank) if i % 10 == 0]
    train = [s for i, s in enumerate(treebank) if i % 10 != 0]
    return train, test


def test_empty_training_corpus_fatal():
    with pytest.raises(ValueError):
        train_tagger([], epochs=1, seed=0)
    with pytest.raises(ValueError):
        train_parser([], epochs=1, seed=0)


def test_held_out_tag_accuracy(held_out_split):
    train, test = held_out_split
    model = train_tagger(train, epochs=5, seed=0)
    correct = total = 0
    for sent in test:
        tags = tag_words([t.form for t in sent.tokens], model)
        for got, tok in zip(tags, sent.tokens):
            total += 1
            correct += got == tok.xpos
    accuracy = correct / total
    # measured 0.9996 on this split at build time
    assert accuracy >= 0.90, accuracy


def test_held_out_attachment_accuracy(held_out_split, annotation_pipeline):
    train, test = held_out_split
    parser = train_parser(train, epochs=5, seed=0)
    pipe = AnnotationPipeline(annotation_pipeline.tagger, parser)
    correct = total = 0
    for sent in test:
        from clickshield.annotation.parser import parse_tagged

        arcs = parse_tagged([t.form for t in sent.tokens],
                            [t.xpos for t in sent.tokens], parser)
        heads = {a.dependent: a.head for a in arcs}
        for i, tok in enumerate(sent.tokens):
            total += 1
            gold_head = tok.head - 1 if tok.head > 0 else ROOT
            correct += heads.get(i) == gold_head
    assert correct / total >= 0.90


def test_single_the_is_dt(annotation_pipeline):
    tags = tag_words(["The"], annotation_pipeline.tagger)
    assert tags == ["DT"]


def test_digit_shape_rule(annotation_pipeline):
    assert tag_words(["15"], annotation_pipeline.tagger) == ["CD"]
    assert tag_words(["7,623"], annotation_pipeline.tagger) == ["CD"]


def test_training_deterministic(treebank):
    small = treebank[:300]
    a = train_tagger(small, epochs=2, seed=7)
    b = train_tagger(small, epochs=2, seed=7)
    assert a.to_dict() == b.to_dict()
    pa = train_parser(small, epochs=2, seed=7)
    pb = train_parser(small, epochs=2, seed=7)
    assert pa.to_dict() == pb.to_dict()


def test_birds_fly_parse(annotation_pipeline):
    ann = annotation_pipeline.annotate(0, "Birds fly")
    arcs = {(a.head, a.dependent, a.relation) for a in ann.arcs}
    assert (ROOT, 1, "root") in arcs
    assert (1, 0, "nsubj") in arcs


def test_single_token_single_root_arc(annotation_pipeline):
    ann = annotation_pipeline.annotate(0, "Wow")
    assert len(ann.arcs) == 1
    assert ann.arcs[0].head == ROOT


def test_long_headline_dependency_length(annotation_pipeline):
    ann = annotation_pipeline.annotate(0, LONG_HEADLINE)
    separation = measures.max_dependency_distance(ann)
    # the longest dependency spans 11 intervening words
    assert separation - 1 == 11


def test_tag_parse_wellformed_on_arbitrary_text(annotation_pipeline):
    @given(st.text(alphabet=string.printable, max_size=60))
    @settings(max_examples=100, deadline=None)
    def run(text):
        ann = annotation_pipeline.annotate(0, text)
        assert len(ann.tokens) == len({t.token.index for t in ann.tokens})
        for tagged in ann.tokens:
            assert tagged.tag in PENN_TAGS
        if ann.tokens:
            root_arcs = [a for a in ann.arcs if a.head == ROOT]
            assert len(root_arcs) == 1
            dependents = [a.dependent for a in ann.arcs]
            assert len(dependents) == len(set(dependents)) == len(ann.tokens)
            assert measures.max_dependency_distance(ann) <= len(ann.tokens) - 1

    run()
