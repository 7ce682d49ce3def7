"""Averaged-perceptron POS tagger over the 45 Penn Treebank tags.

Purely numeric tokens are tagged CD by rule; everything else goes
through the learned model with lexical, suffix, shape, and context
features, so unknown words are never rejected.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass

from .conllu import ConlluSentence
from .perceptron import AveragedPerceptron, shuffled
from .tokenizer import is_number

PENN_TAGS = [
    "CC", "CD", "DT", "EX", "FW", "IN", "JJ", "JJR", "JJS", "LS", "MD",
    "NN", "NNS", "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR",
    "RBS", "RP", "SYM", "TO", "UH", "VB", "VBD", "VBG", "VBN", "VBP",
    "VBZ", "WDT", "WP", "WP$", "WRB", "#", "$", ".", ",", ":", "(", ")",
    "``", "''",
]

_PUNCT_TAGS = {
    ".": ".", "!": ".", "?": ".", ",": ",", ":": ":", ";": ":", "...": ":",
    "(": "(", ")": ")", "``": "``", "`": "``", "“": "``", "‘": "``",
    "''": "''", "”": "''", "’": "''", '"': "''", "'": "''", "$": "$", "#": "#",
}


def _shape(word: str) -> str:
    out = []
    for ch in word:
        if ch.isupper():
            out.append("X")
        elif ch.islower():
            out.append("x")
        elif ch.isdigit():
            out.append("d")
        else:
            out.append(ch)
    shape = "".join(out)
    return shape if len(shape) <= 4 else shape[:2] + "*" + shape[-1]


def _features(words: list[str], i: int, prev: str, prev2: str) -> list[str]:
    word = words[i]
    low = word.lower()
    feats = [
        "bias",
        "w=" + low,
        "suf3=" + low[-3:],
        "suf2=" + low[-2:],
        "suf1=" + low[-1:],
        "pre1=" + low[:1],
        "shape=" + _shape(word),
        "t-1=" + prev,
        "t-2=" + prev2,
        "t-1t-2=" + prev + "|" + prev2,
        "w-1=" + (words[i - 1].lower() if i > 0 else "<s>"),
        "w+1=" + (words[i + 1].lower() if i + 1 < len(words) else "</s>"),
        "t-1w=" + prev + "|" + low,
    ]
    if i == 0:
        feats.append("first")
    if word[:1].isupper():
        feats.append("cap")
    if "-" in word:
        feats.append("hyph")
    return feats


@dataclass
class TaggerModel:
    perceptron: AveragedPerceptron
    version: int
    corpus_hash: str
    epochs: int

    def to_dict(self) -> dict:
        return {
            "kind": "tagger",
            "version": self.version,
            "corpus_hash": self.corpus_hash,
            "epochs": self.epochs,
            "perceptron": self.perceptron.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TaggerModel":
        return cls(
            perceptron=AveragedPerceptron.from_dict(data["perceptron"]),
            version=data["version"],
            corpus_hash=data["corpus_hash"],
            epochs=data["epochs"],
        )


def _rule_tag(word: str) -> str | None:
    if is_number(word):
        return "CD"
    if word in _PUNCT_TAGS:
        return _PUNCT_TAGS[word]
    if not any(c.isalnum() for c in word):
        return ":"
    return None


def corpus_fingerprint(sentences: list[ConlluSentence]) -> str:
    h = hashlib.sha256()
    for sent in sentences:
        for tok in sent.tokens:
            h.update(f"{tok.form}\x00{tok.xpos}\x00{tok.head}\x00{tok.deprel}\x01".encode())
        h.update(b"\x02")
    return h.hexdigest()[:16]


def train_tagger(
    sentences: list[ConlluSentence],
    epochs: int = 5,
    seed: int = 0,
    version: int = 1,
) -> TaggerModel:
    if not sentences:
        raise ValueError("empty tagger training corpus")
    model = AveragedPerceptron(PENN_TAGS)
    rng = random.Random(seed)
    data = [([t.form for t in s.tokens], [t.xpos for t in s.tokens]) for s in sentences]
    for _ in range(epochs):
        for words, tags in shuffled(data, rng):
            prev, prev2 = "<s>", "<s>"
            for i, gold in enumerate(tags):
                rule = _rule_tag(words[i])
                if rule is not None:
                    guess = rule
                else:
                    feats = _features(words, i, prev, prev2)
                    guess = model.score(feats)
                    model.update(gold, guess, feats)
                prev2, prev = prev, guess
    model.average()
    return TaggerModel(
        perceptron=model,
        version=version,
        corpus_hash=corpus_fingerprint(sentences),
        epochs=epochs,
    )


def tag_words(words: list[str], model: TaggerModel) -> list[str]:
    tags: list[str] = []
    prev, prev2 = "<s>", "<s>"
    for i, word in enumerate(words):
        guess = _rule_tag(word)
        if guess is None:
            guess = model.perceptron.score(_features(words, i, prev, prev2))
        tags.append(guess)
        prev2, prev = prev, guess
    return tags
