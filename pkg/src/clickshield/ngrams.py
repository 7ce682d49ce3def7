"""Word, POS, and syntactic N-gram extraction with levelwise
document-frequency pruning (APRIORI-style sub-sequence property)."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .annotation import AnnotatedHeadline, ROOT
from .corpus import Label
from . import measures

NO_SUBJECT = "<no-subject>"

Gram = tuple[str, ...]


def _contiguous(seq: list[str], n_min: int, n_max: int) -> Counter:
    grams: Counter = Counter()
    for n in range(n_min, n_max + 1):
        for i in range(len(seq) - n + 1):
            grams[tuple(seq[i : i + n])] += 1
    return grams


def extract_word_ngrams(ann: AnnotatedHeadline, n_max: int = 4) -> Counter:
    """Contiguous sequences of normalized word tokens; stop words are
    retained by design, punctuation tokens excluded."""
    return _contiguous([w.lower() for w in measures.words(ann)], 1, n_max)


def extract_pos_ngrams(ann: AnnotatedHeadline, n_max: int = 4) -> Counter:
    return _contiguous(measures.pos_tags(ann), 1, n_max)


def extract_syntactic_ngrams(
    ann: AnnotatedHeadline, n_min: int = 2, n_max: int = 4
) -> Counter:
    """Sequences of dependency relation labels along downward paths,
    depth-first from every node as source."""
    children: dict[int, list[tuple[int, str]]] = {}
    for arc in ann.arcs:
        if arc.head == ROOT:
            continue
        children.setdefault(arc.head, []).append((arc.dependent, arc.relation))
    for kids in children.values():
        kids.sort()
    grams: Counter = Counter()

    def walk(node: int, path: list[str], seen: frozenset) -> None:
        if len(path) >= n_min:
            grams[tuple(path)] += 1
        if len(path) >= n_max:
            return
        for child, rel in children.get(node, []):
            if child in seen:
                continue
            walk(child, path + [rel], seen | {child})

    nodes = {t.token.index for t in ann.tokens}
    for source in sorted(nodes):
        for child, rel in children.get(source, []):
            walk(child, [rel], frozenset({source, child}))
    return grams


def extract_subject(ann: AnnotatedHeadline) -> str:
    """Dependent of the leftmost nsubj arc, lowercased."""
    best = None
    for arc in ann.arcs:
        if arc.relation == "nsubj":
            if best is None or arc.dependent < best:
                best = arc.dependent
    if best is None:
        return NO_SUBJECT
    return ann.tokens[best].token.normalized.lower()


@dataclass
class PrunedNGramSet:
    kind: str  # word | pos | syn
    min_doc_freq: int
    grams: dict[Gram, dict[str, int]]  # gram -> per-class document frequency

    def __contains__(self, gram: Gram) -> bool:
        return gram in self.grams

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "min_doc_freq": self.min_doc_freq,
            "grams": [
                {"items": list(g), "df": df} for g, df in sorted(self.grams.items())
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PrunedNGramSet":
        return cls(
            kind=data["kind"],
            min_doc_freq=data["min_doc_freq"],
            grams={tuple(e["items"]): dict(e["df"]) for e in data["grams"]},
        )


def prune(
    per_headline_grams: list[tuple[Label, set[Gram]]],
    min_doc_freq: int,
    kind: str,
    n_min: int = 1,
    n_max: int = 4,
) -> PrunedNGramSet:
    """Bottom-up levelwise pruning on headline-level document frequency.

    A gram of length n is only counted if both of its length-(n-1)
    contiguous sub-grams survived the previous level; contiguous counting
    makes document frequency anti-monotone, so this equals brute force.
    """
    if min_doc_freq < 1:
        raise ValueError("min_doc_freq must be >= 1")
    retained: dict[Gram, dict[str, int]] = {}
    survivors_prev: set[Gram] = set()
    for n in range(n_min, n_max + 1):
        df: dict[Gram, dict[str, int]] = {}
        for label, grams in per_headline_grams:
            seen = set()
            for g in grams:
                if len(g) != n or g in seen:
                    continue
                if n > n_min and (g[:-1] not in survivors_prev or g[1:] not in survivors_prev):
                    continue
                seen.add(g)
                slot = df.setdefault(g, {l.value: 0 for l in Label})
                slot[label.value] += 1
        survivors = {
            g for g, slot in df.items() if sum(slot.values()) >= min_doc_freq
        }
        for g in survivors:
            retained[g] = df[g]
        survivors_prev = survivors
    return PrunedNGramSet(kind=kind, min_doc_freq=min_doc_freq, grams=retained)
