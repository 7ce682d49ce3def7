"""Labeled headline corpora, lexicon assets, stratified folds, and
per-class comparative statistics."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path


class CorpusError(Exception):
    pass


class Label(Enum):
    CLICKBAIT = "clickbait"
    NEWS = "news"


_LABEL_ALIASES = {
    "clickbait": Label.CLICKBAIT,
    "news": Label.NEWS,
    "non-clickbait": Label.NEWS,
}


@dataclass(frozen=True)
class LabeledHeadline:
    id: int
    text: str
    label: Label
    source: str | None = None

    def __post_init__(self):
        if not self.text.strip():
            raise CorpusError("headline text empty")
        if "\n" in self.text:
            raise CorpusError("headline text contains newline")


LEXICON_NAMES = (
    "stopwords",
    "hyperbolic",
    "slang",
    "clickbait_phrases",
    "determiners",
    "common200",
)


@dataclass(frozen=True)
class Lexicon:
    name: str
    entries: frozenset[str]

    def __contains__(self, item: str) -> bool:
        return item.lower() in self.entries


@dataclass
class LoadResult:
    headlines: list[LabeledHeadline]
    errors: list[tuple[int, str]] = field(default_factory=list)


def parse_label(raw: str) -> Label:
    label = _LABEL_ALIASES.get(raw.strip().lower())
    if label is None:
        raise CorpusError(f"unknown label {raw!r}")
    return label


def load_corpus(path: str | Path, fmt: str | None = None) -> LoadResult:
    """fmt is 'jsonl' or 'tsv'; inferred from the file suffix if None.
    Malformed records are skipped and reported, an unreadable file is fatal."""
    path = Path(path)
    if fmt is None:
        fmt = "tsv" if path.suffix.lower() in (".tsv", ".tab") else "jsonl"
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise CorpusError(f"cannot read corpus {path}: {exc}") from exc
    result = LoadResult(headlines=[])
    next_id = 0
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            if fmt == "jsonl":
                record = json.loads(line)
                text = record["headline"]
                label = parse_label(str(record["label"]))
                source = record.get("source")
            else:
                text, _, raw_label = line.partition("\t")
                if not raw_label:
                    raise CorpusError("missing tab-separated label")
                label = parse_label(raw_label)
                source = None
            headline = LabeledHeadline(id=next_id, text=text, label=label, source=source)
        except (CorpusError, KeyError, TypeError, json.JSONDecodeError) as exc:
            result.errors.append((lineno, str(exc)))
            continue
        result.headlines.append(headline)
        next_id += 1
    return result


def save_corpus(headlines: list[LabeledHeadline], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        for h in headlines:
            record = {"headline": h.text, "label": h.label.value}
            if h.source:
                record["source"] = h.source
            f.write(json.dumps(record, ensure_ascii=False) + "\n")


def parse_lexicon(text: str, name: str) -> Lexicon:
    entries = set()
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        entries.add(line.lower())
    if not entries:
        raise CorpusError(f"lexicon {name!r} is empty")
    return Lexicon(name=name, entries=frozenset(entries))


def load_lexicon(path: str | Path, name: str) -> Lexicon:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CorpusError(f"cannot read lexicon {path}: {exc}") from exc
    return parse_lexicon(text, name)


def bundled_data_path(filename: str) -> Path:
    return Path(str(resources.files("clickshield").joinpath("data").joinpath(filename)))


def load_bundled_lexicons() -> dict[str, Lexicon]:
    return {
        name: load_lexicon(bundled_data_path(name + ".txt"), name)
        for name in LEXICON_NAMES
    }


@dataclass
class FoldAssignment:
    k: int
    assignment: dict[int, int]  # headline id -> fold index

    def fold_ids(self, fold: int) -> list[int]:
        return sorted(i for i, f in self.assignment.items() if f == fold)


def stratified_folds(corpus: list[LabeledHeadline], k: int, seed: int) -> FoldAssignment:
    if k < 2:
        raise ValueError("k must be >= 2")
    by_label: dict[Label, list[int]] = {}
    for h in corpus:
        by_label.setdefault(h.label, []).append(h.id)
    if any(len(ids) < k for ids in by_label.values()):
        raise ValueError("k exceeds the smallest class count")
    rng = random.Random(seed)
    assignment: dict[int, int] = {}
    for label in sorted(by_label, key=lambda l: l.value):
        ids = sorted(by_label[label])
        rng.shuffle(ids)
        for pos, headline_id in enumerate(ids):
            assignment[headline_id] = pos % k
    return FoldAssignment(k=k, assignment=assignment)
