from clickshield.annotation import (
    ROOT,
    ingest_conllu,
    normalize_case,
    tree_height,
)
from clickshield.annotation.parser import DependencyArc
from clickshield.annotation.tagger import tag_words
from clickshield.annotation.tokenizer import tokenize


def test_normalize_case_keeps_entities(annotation_pipeline):
    tokens = tokenize("Which Disney Song Are You")
    first_pass = tag_words([t.surface for t in tokens], annotation_pipeline.tagger)
    normalize_case(tokens, first_pass)
    assert [t.normalized for t in tokens] == ["which", "Disney", "song", "are", "you"]


def test_normalize_case_lowercase_identity(annotation_pipeline):
    tokens = tokenize("birds fly south")
    first_pass = tag_words([t.surface for t in tokens], annotation_pipeline.tagger)
    normalize_case(tokens, first_pass)
    assert [t.normalized for t in tokens] == ["birds", "fly", "south"]


def test_normalize_case_allcaps_retained(annotation_pipeline):
    tokens = tokenize("NASA launches probe")
    first_pass = tag_words([t.surface for t in tokens], annotation_pipeline.tagger)
    normalize_case(tokens, first_pass)
    assert tokens[0].normalized == "NASA"


def test_annotate_quiz_headline(annotation_pipeline):
    ann = annotation_pipeline.annotate(0, "Which Dead ‘Grey's Anatomy’ Character Are You")
    by_norm = {t.token.normalized: t.tag for t in ann.tokens}
    assert by_norm["which"] == "WDT"
    assert by_norm["dead"] == "JJ"
    assert by_norm["character"] == "NN"


def test_tree_height_shapes():
    # single token
    assert tree_height([DependencyArc(ROOT, 0, "root")]) == 1
    # chain ROOT -> 1 -> 0
    arcs = [DependencyArc(ROOT, 1, "root"), DependencyArc(1, 0, "nsubj")]
    assert tree_height(arcs) == 2
    assert tree_height([]) == 0


def test_ingest_conllu_gold_bypass(tmp_path):
    path = tmp_path / "g.conllu"
    path.write_text(
        "1\tBirds\t_\t_\tNNS\t_\t2\tnsubj\t_\t_\n"
        "2\tfly\t_\t_\tVBP\t_\t0\troot\t_\t_\n\n",
        encoding="utf-8",
    )
    anns = ingest_conllu(str(path))
    assert len(anns) == 1
    assert [t.tag for t in anns[0].tokens] == ["NNS", "VBP"]
    arcs = {(a.head, a.dependent, a.relation) for a in anns[0].arcs}
    assert (1, 0, "nsubj") in arcs and (ROOT, 1, "root") in arcs


def test_clickbait_trees_taller_than_news(sample_corpus, sample_annotations):
    from clickshield.corpus import Label

    heights = {Label.CLICKBAIT: [], Label.NEWS: []}
    for h, a in zip(sample_corpus, sample_annotations):
        heights[h.label].append(a.tree_height)
    mean = lambda xs: sum(xs) / len(xs)
    assert mean(heights[Label.CLICKBAIT]) > mean(heights[Label.NEWS])
