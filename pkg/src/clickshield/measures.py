"""Per-headline linguistic measures.

Single source of truth shared by corpus statistics and classifier
feature extraction, so the two can never drift apart.
"""

from __future__ import annotations

import re

from .annotation import AnnotatedHeadline, ROOT, is_number, is_quote, is_word
from .corpus import Lexicon

_UNUSUAL_FIXED = {"!?", "?!", "..."}


def words(ann: AnnotatedHeadline) -> list[str]:
    return [t.token.normalized for t in ann.tokens if is_word(t.token.surface)]


def num_words(ann: AnnotatedHeadline) -> int:
    return len(words(ann))


def avg_word_chars(ann: AnnotatedHeadline) -> float:
    ws = words(ann)
    if not ws:
        return 0.0
    return sum(len(w) for w in ws) / len(ws)


def stopword_counts(ann: AnnotatedHeadline, stopwords: Lexicon) -> tuple[int, int]:
    """(stop word count, content word count)."""
    stop = 0
    content = 0
    for w in words(ann):
        if w.lower() in stopwords.entries:
            stop += 1
        else:
            content += 1
    return stop, content


def stop_to_content_ratio(ann: AnnotatedHeadline, stopwords: Lexicon) -> float:
    stop, content = stopword_counts(ann, stopwords)
    return stop / max(content, 1)


def max_dependency_distance(ann: AnnotatedHeadline) -> int:
    """Largest index separation |head - dependent| over non-root arcs."""
    best = 0
    for arc in ann.arcs:
        if arc.head == ROOT:
            continue
        best = max(best, abs(arc.head - arc.dependent))
    return best


def contraction_count(ann: AnnotatedHeadline) -> int:
    """Number of contracted forms: each split suffix token counts once."""
    return sum(
        1
        for t in ann.tokens
        if t.token.is_contraction_part and _is_suffix_part(t.token.surface)
    )


def _is_suffix_part(surface: str) -> bool:
    low = surface.lower().replace("’", "'")
    return low in ("n't", "'re", "'ll", "'ve", "'d", "'m", "'s")


def starts_with_cardinal(ann: AnnotatedHeadline) -> int:
    for t in ann.tokens:
        if is_word(t.token.surface):
            return 1 if (t.tag == "CD" or is_number(t.token.surface)) else 0
    return 0


def unusual_punct_count(ann: AnnotatedHeadline) -> int:
    count = 0
    for t in ann.tokens:
        s = t.token.surface
        if is_word(s) or is_quote(s):
            continue
        if s in _UNUSUAL_FIXED:
            count += 1
        elif len(s) >= 2 and len(set(s)) == 1 and s[0] != ".":
            count += 1
    return count


def hyperbolic_present(ann: AnnotatedHeadline, hyperbolic: Lexicon) -> int:
    return 1 if any(w.lower() in hyperbolic.entries for w in words(ann)) else 0


def slang_count(ann: AnnotatedHeadline, slang: Lexicon) -> int:
    return sum(1 for w in words(ann) if w.lower() in slang.entries)


def determiner_count(ann: AnnotatedHeadline, determiners: Lexicon) -> int:
    return sum(1 for w in words(ann) if w.lower() in determiners.entries)


def phrase_count(text_words: list[str], phrases: Lexicon) -> int:
    joined = " " + " ".join(w.lower() for w in text_words) + " "
    count = 0
    for phrase in phrases.entries:
        count += len(re.findall(re.escape(" " + phrase + " "), joined))
    return count


def clickbait_phrase_count(ann: AnnotatedHeadline, phrases: Lexicon) -> int:
    return phrase_count(words(ann), phrases)


def pos_tags(ann: AnnotatedHeadline) -> list[str]:
    return [t.tag for t in ann.tokens if is_word(t.token.surface)]
