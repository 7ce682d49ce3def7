"""Concept graph (pluggable semantic network substitute), topic tag
extraction, and nugget building/merging."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from html.parser import HTMLParser
from pathlib import Path

from ..annotation import AnnotatedHeadline


class ConceptGraphError(Exception):
    pass


@dataclass
class ConceptGraph:
    lemmas: dict[str, frozenset[str]]  # node id -> lemma set
    hypernyms: dict[str, set[str]]  # node id -> parent node ids
    lemma_index: dict[str, set[str]] = field(default_factory=dict)

    def __post_init__(self):
        if not self.lemma_index:
            for node, lemmas in self.lemmas.items():
                for lemma in lemmas:
                    self.lemma_index.setdefault(lemma, set()).add(node)
        for node, parents in self.hypernyms.items():
            if node not in self.lemmas or any(p not in self.lemmas for p in parents):
                raise ConceptGraphError("hypernym edge references unknown node")
        self._check_acyclic()

    def _check_acyclic(self) -> None:
        seen: dict[str, int] = {}

        def visit(node: str) -> None:
            state = seen.get(node, 0)
            if state == 1:
                raise ConceptGraphError("hypernym cycle detected")
            if state == 2:
                return
            seen[node] = 1
            for parent in self.hypernyms.get(node, ()):  # noqa: B905
                visit(parent)
            seen[node] = 2

        for node in self.lemmas:
            visit(node)

    def hypernyms_within(self, node: str, radius: int) -> set[str]:
        out: set[str] = set()
        frontier = {node}
        for _ in range(radius):
            frontier = {
                p for n in frontier for p in self.hypernyms.get(n, ())
            } - out
            out |= frontier
        return out


def parse_concept_graph(text: str) -> ConceptGraph:
    """Format: header 'conceptgraph v1', then
    'N <id> <lemma>[,lemma...]' node lines and 'H <child> <parent>' edges."""
    lines = [l.strip() for l in text.splitlines() if l.strip() and not l.startswith("#")]
    if not lines or lines[0] != "conceptgraph v1":
        raise ConceptGraphError("missing 'conceptgraph v1' header")
    lemmas: dict[str, frozenset[str]] = {}
    hypernyms: dict[str, set[str]] = {}
    for line in lines[1:]:
        parts = line.split(None, 2)
        if parts[0] == "N" and len(parts) == 3:
            node_id, lemma_csv = parts[1], parts[2]
            lemmas[node_id] = frozenset(
                l.strip().lower().replace("_", " ") for l in lemma_csv.split(",") if l.strip()
            )
        elif parts[0] == "H" and len(parts) == 3:
            hypernyms.setdefault(parts[1], set()).add(parts[2])
        else:
            raise ConceptGraphError(f"bad concept graph line: {line!r}")
    return ConceptGraph(lemmas=lemmas, hypernyms=hypernyms)


def load_concept_graph(path: str | Path) -> ConceptGraph:
    return parse_concept_graph(Path(path).read_text(encoding="utf-8"))


@dataclass
class Nugget:
    members: frozenset[str]
    seed_tags: frozenset[str]


class _HeadMetaParser(HTMLParser):
    def __init__(self):
        super().__init__()
        self.in_head = False
        self.tags: set[str] = set()

    def handle_starttag(self, tag, attrs):
        if tag == "head":
            self.in_head = True
        elif tag == "meta" and self.in_head:
            attr = dict(attrs)
            name = (attr.get("name") or attr.get("property") or "").lower()
            content = attr.get("content") or ""
            if name in ("keywords", "news_keywords", "article:tag", "tags", "tag"):
                for part in re.split(r"[,;|]", content):
                    part = part.strip().lower()
                    if part:
                        self.tags.add(part)

    def handle_endtag(self, tag):
        if tag == "head":
            self.in_head = False


_CONTENT_NOUN_ADJ = {"NN", "NNS", "NNP", "NNPS", "JJ", "JJR", "JJS"}


def headline_content_tags(ann: AnnotatedHeadline) -> set[str]:
    return {
        t.token.normalized.lower()
        for t in ann.tokens
        if t.tag in _CONTENT_NOUN_ADJ
    }


def extract_tags(ann: AnnotatedHeadline, html: str | None = None) -> set[str]:
    """Union of head metatag keywords and headline content words
    (nouns/adjectives). Unparseable HTML degrades to headline-only."""
    tags = headline_content_tags(ann)
    if html:
        try:
            parser = _HeadMetaParser()
            parser.feed(html)
            tags |= parser.tags
        except Exception:  # html.parser is lenient; belt and braces
            pass
    return tags


def build_nugget(tags: set[str], graph: ConceptGraph) -> Nugget:
    """Tags map to nodes via the lemma index; the cluster is expanded by
    every hypernym within 2 edges shared by at least 2 member nodes."""
    members: set[str] = set()
    for tag in tags:
        members |= graph.lemma_index.get(tag.lower(), set())
    shared: dict[str, int] = {}
    for node in members:
        for hyper in graph.hypernyms_within(node, radius=2):
            shared[hyper] = shared.get(hyper, 0) + 1
    members |= {h for h, c in shared.items() if c >= 2}
    return Nugget(members=frozenset(members), seed_tags=frozenset(t.lower() for t in tags))


def merge_nuggets(nuggets: list[Nugget]) -> list[Nugget]:
    """Union nuggets sharing any node, repeated to fixpoint."""
    merged = [[set(n.members), set(n.seed_tags)] for n in nuggets]
    changed = True
    while changed:
        changed = False
        out: list[list[set]] = []
        for members, seeds in merged:
            for other in out:
                if members & other[0]:
                    other[0] |= members
                    other[1] |= seeds
                    changed = True
                    break
            else:
                out.append([members, seeds])
        merged = out
    return [Nugget(members=frozenset(m), seed_tags=frozenset(s)) for m, s in merged]


def nugget_similarity(a: Nugget, b: Nugget) -> int:
    return len(a.members & b.members)
