"""Linguistic pattern normalization and word-level edit distance.

A headline becomes a sequence of pattern tokens: literal lowercase
words (top-200 common words and closed-class words), POS tags for the
remaining content words, <D> for numbers, and <QUOTE> for quoted spans.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..annotation import AnnotatedHeadline, is_number, is_quote
from ..corpus import Lexicon

DIGIT_TAG = "<D>"
QUOTE_TAG = "<QUOTE>"

# PTB tags for nouns, adjectives, adverbs, and verb inflections
_CONTENT_TAGS = {
    "NN", "NNS", "NNP", "NNPS",
    "JJ", "JJR", "JJS",
    "RB", "RBR", "RBS",
    "VB", "VBD", "VBG", "VBN", "VBP", "VBZ", "MD",
}

_QUOTE_PAIRS = {"“": "”", "‘": "’", "`": "'", '"': '"', "'": "'"}


@dataclass(frozen=True)
class HeadlinePattern:
    items: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.items)


def _quote_spans(tokens) -> list[tuple[int, int]]:
    """(open, close) token index pairs for matching quote delimiters.
    An unmatched delimiter is left alone and treated as a literal."""
    spans = []
    i = 0
    n = len(tokens)
    while i < n:
        surface = tokens[i].token.surface
        if is_quote(surface):
            closer = _QUOTE_PAIRS.get(surface)
            if closer is not None:
                for j in range(i + 1, n):
                    if tokens[j].token.surface == closer:
                        spans.append((i, j))
                        i = j
                        break
        i += 1
    return spans


def normalize_pattern(ann: AnnotatedHeadline, common: Lexicon) -> HeadlinePattern:
    spans = _quote_spans(ann.tokens)
    span_start = {a: b for a, b in spans}
    items: list[str] = []
    i = 0
    tokens = ann.tokens
    while i < len(tokens):
        if i in span_start:
            items.append(QUOTE_TAG)
            i = span_start[i] + 1
            continue
        tok = tokens[i]
        surface = tok.token.surface
        word = tok.token.normalized.lower()
        if is_number(surface) or tok.tag == "CD":
            items.append(DIGIT_TAG)
        elif word in common.entries:
            items.append(word)
        elif tok.tag in _CONTENT_TAGS:
            items.append(tok.tag)
        else:
            items.append(word)
        i += 1
    return HeadlinePattern(items=tuple(items))


def word_edit_distance(p: HeadlinePattern, q: HeadlinePattern) -> int:
    """Levenshtein distance over pattern tokens, unit costs."""
    a, b = p.items, q.items
    if len(a) < len(b):
        a, b = b, a
    previous = list(range(len(b) + 1))
    for i, item_a in enumerate(a, start=1):
        current = [i] + [0] * len(b)
        for j, item_b in enumerate(b, start=1):
            current[j] = min(
                previous[j] + 1,
                current[j - 1] + 1,
                previous[j - 1] + (0 if item_a == item_b else 1),
            )
        previous = current
    return previous[len(b)]


def pattern_similarity(p: HeadlinePattern, q: HeadlinePattern) -> float:
    """1 - dist/max(|p|,|q|); in [0,1], 1 iff equal."""
    longest = max(len(p), len(q))
    if longest == 0:
        return 1.0
    return 1.0 - word_edit_distance(p, q) / longest
