"""Linguistic annotation: tokenization, POS tagging, dependency parsing.

The full pipeline runs tokenize -> first-pass tag (on surface forms) ->
case normalization (entities and acronyms keep their casing, everything
else is lowercased to undo headline title case) -> final tag -> parse.
"""

from __future__ import annotations

from dataclasses import dataclass

from .conllu import ConlluSentence, load_conllu
from .parser import ROOT, DependencyArc, ParserModel, parse_tagged, train_parser
from .tagger import PENN_TAGS, TaggerModel, tag_words, train_tagger
from .tokenizer import Token, is_number, is_quote, is_word, tokenize

__all__ = [
    "Token",
    "PosTaggedToken",
    "DependencyArc",
    "AnnotatedHeadline",
    "TaggerModel",
    "ParserModel",
    "AnnotationPipeline",
    "tokenize",
    "normalize_case",
    "train_tagger",
    "train_parser",
    "tag_words",
    "parse_tagged",
    "ingest_conllu",
    "tree_height",
    "PENN_TAGS",
    "ROOT",
    "is_word",
    "is_number",
    "is_quote",
]


@dataclass
class PosTaggedToken:
    token: Token
    tag: str


@dataclass
class AnnotatedHeadline:
    id: int
    tokens: list[PosTaggedToken]
    arcs: list[DependencyArc]
    tree_height: int

    def word_tokens(self) -> list[PosTaggedToken]:
        return [t for t in self.tokens if is_word(t.token.surface)]


def normalize_case(tokens: list[Token], first_pass_tags: list[str]) -> None:
    """Entities (first-pass NNP/NNPS) and all-caps acronyms keep their
    surface casing; every other token is lowercased."""
    for tok, tag in zip(tokens, first_pass_tags):
        keep = tag in ("NNP", "NNPS") or (
            len(tok.surface) >= 2 and tok.surface.isupper() and tok.surface.isalpha()
        )
        tok.normalized = tok.surface if keep else tok.surface.lower()


def tree_height(arcs: list[DependencyArc]) -> int:
    """Longest root-to-leaf path, counted in arcs from the ROOT sentinel."""
    children: dict[int, list[int]] = {}
    roots = []
    for arc in arcs:
        if arc.head == ROOT:
            roots.append(arc.dependent)
        else:
            children.setdefault(arc.head, []).append(arc.dependent)

    def depth(node: int, seen: frozenset) -> int:
        if node in seen:
            return 0
        kids = children.get(node, [])
        if not kids:
            return 0
        return 1 + max(depth(k, seen | {node}) for k in kids)

    if not roots:
        return 0
    return 1 + max(depth(r, frozenset()) for r in roots)


class AnnotationPipeline:
    def __init__(self, tagger: TaggerModel, parser: ParserModel):
        self.tagger = tagger
        self.parser = parser

    def annotate(self, headline_id: int, text: str) -> AnnotatedHeadline:
        tokens = tokenize(text)
        if not tokens:
            return AnnotatedHeadline(id=headline_id, tokens=[], arcs=[], tree_height=0)
        surfaces = [t.surface for t in tokens]
        first_pass = tag_words(surfaces, self.tagger)
        normalize_case(tokens, first_pass)
        forms = [t.normalized for t in tokens]
        tags = tag_words(forms, self.tagger)
        arcs = parse_tagged(forms, tags, self.parser)
        return AnnotatedHeadline(
            id=headline_id,
            tokens=[PosTaggedToken(token=t, tag=g) for t, g in zip(tokens, tags)],
            arcs=arcs,
            tree_height=tree_height(arcs),
        )


def _sentence_to_annotated(headline_id: int, sent: ConlluSentence) -> AnnotatedHeadline:
    tokens = []
    for i, ct in enumerate(sent.tokens):
        tokens.append(
            PosTaggedToken(
                token=Token(surface=ct.form, normalized=ct.form.lower(), index=i),
                tag=ct.xpos,
            )
        )
    arcs = [
        DependencyArc(head=ct.head - 1 if ct.head > 0 else ROOT, dependent=i, relation=ct.deprel)
        for i, ct in enumerate(sent.tokens)
    ]
    return AnnotatedHeadline(
        id=headline_id, tokens=tokens, arcs=arcs, tree_height=tree_height(arcs)
    )


def ingest_conllu(path) -> list[AnnotatedHeadline]:
    """Gold annotations bypass the trained models."""
    sentences, _skipped = load_conllu(path)
    return [_sentence_to_annotated(i, s) for i, s in enumerate(sentences)]
