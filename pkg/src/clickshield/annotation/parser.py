"""Greedy arc-standard transition dependency parser.

Projective trees only; non-projective training sentences are skipped.
Parsing always yields a single-rooted tree: if the transition sequence
strands tokens, they are attached under the root token with a generic
relation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .conllu import ConlluSentence
from .perceptron import AveragedPerceptron, shuffled
from .tagger import corpus_fingerprint

ROOT = -1
SHIFT = "S"


@dataclass(frozen=True)
class DependencyArc:
    head: int  # token index, or ROOT sentinel
    dependent: int
    relation: str


@dataclass
class ParserModel:
    perceptron: AveragedPerceptron
    version: int
    corpus_hash: str
    epochs: int

    def to_dict(self) -> dict:
        return {
            "kind": "parser",
            "version": self.version,
            "corpus_hash": self.corpus_hash,
            "epochs": self.epochs,
            "perceptron": self.perceptron.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ParserModel":
        return cls(
            perceptron=AveragedPerceptron.from_dict(data["perceptron"]),
            version=data["version"],
            corpus_hash=data["corpus_hash"],
            epochs=data["epochs"],
        )


def _features(words, tags, stack, buffer_pos, n) -> list[str]:
    def word(i):
        return words[i] if 0 <= i < n else "<none>"

    def tag(i):
        return tags[i] if 0 <= i < n else "<none>"

    s0 = stack[-1] if stack else -9
    s1 = stack[-2] if len(stack) > 1 else -9
    b0 = buffer_pos if buffer_pos < n else -9
    b1 = buffer_pos + 1 if buffer_pos + 1 < n else -9
    feats = [
        "bias",
        "s0w=" + word(s0),
        "s0t=" + tag(s0),
        "s1w=" + word(s1),
        "s1t=" + tag(s1),
        "b0w=" + word(b0),
        "b0t=" + tag(b0),
        "b1t=" + tag(b1),
        "s0ws1w=" + word(s0) + "|" + word(s1),
        "s0ts1t=" + tag(s0) + "|" + tag(s1),
        "s0ws1t=" + word(s0) + "|" + tag(s1),
        "s0ts1w=" + tag(s0) + "|" + word(s1),
        "s0tb0t=" + tag(s0) + "|" + tag(b0),
        "s1ts0tb0t=" + tag(s1) + "|" + tag(s0) + "|" + tag(b0),
        "s0wb0t=" + word(s0) + "|" + tag(b0),
        "dist=" + str(min(abs(s0 - s1), 6) if s1 >= 0 and s0 >= 0 else -1),
    ]
    return feats


def _is_projective(heads: list[int]) -> bool:
    n = len(heads)
    for d1 in range(n):
        h1 = heads[d1]
        if h1 < 0:
            continue
        a1, b1 = sorted((d1, h1))
        for d2 in range(n):
            h2 = heads[d2]
            if h2 < 0:
                continue
            a2, b2 = sorted((d2, h2))
            if a1 < a2 < b1 < b2 or a2 < a1 < b2 < b1:
                return False
    return True


def _oracle_transition(stack, buffer_pos, n, heads, labels, remaining_deps):
    if len(stack) >= 2:
        s0, s1 = stack[-1], stack[-2]
        if heads[s1] == s0 and remaining_deps[s1] == 0:
            return "L:" + labels[s1]
        if heads[s0] == s1 and remaining_deps[s0] == 0:
            return "R:" + labels[s0]
    if buffer_pos < n:
        return SHIFT
    # fall back: reduce whatever is on the stack
    if len(stack) >= 2:
        s0, s1 = stack[-1], stack[-2]
        if heads[s1] == s0:
            return "L:" + labels[s1]
        return "R:" + labels[s0]
    return SHIFT


def _gold_transitions(words, tags, heads, labels):
    """Static arc-standard oracle: sequence of (features, transition)."""
    n = len(words)
    remaining = [0] * n
    for d in range(n):
        if heads[d] >= 0:
            remaining[heads[d]] += 1
    stack: list[int] = []
    buffer_pos = 0
    steps = []
    while buffer_pos < n or len(stack) > 1:
        trans = _oracle_transition(stack, buffer_pos, n, heads, labels, remaining)
        if trans == SHIFT and buffer_pos >= n:
            return None  # oracle stuck (non-projective leftovers)
        steps.append((_features(words, tags, stack, buffer_pos, n), trans))
        stack, buffer_pos = _apply(trans, stack, buffer_pos, remaining)
    return steps


def _apply(trans, stack, buffer_pos, remaining=None):
    stack = list(stack)
    if trans == SHIFT:
        stack.append(buffer_pos)
        return stack, buffer_pos + 1
    s0 = stack.pop()
    s1 = stack.pop()
    if trans.startswith("L:"):
        stack.append(s0)
        dep = s1
    else:
        stack.append(s1)
        dep = s0
    if remaining is not None:
        # bookkeeping only meaningful during oracle simulation
        head = stack[-1]
        if 0 <= head < len(remaining):
            remaining[head] = max(0, remaining[head] - 1)
    return stack, buffer_pos


def train_parser(
    sentences: list[ConlluSentence],
    epochs: int = 5,
    seed: int = 0,
    version: int = 1,
) -> ParserModel:
    if not sentences:
        raise ValueError("empty parser training corpus")
    relations = sorted({t.deprel for s in sentences for t in s.tokens})
    classes = [SHIFT] + ["L:" + r for r in relations] + ["R:" + r for r in relations]
    model = AveragedPerceptron(classes)
    data = []
    for sent in sentences:
        words = [t.form for t in sent.tokens]
        tags = [t.xpos for t in sent.tokens]
        heads = [t.head - 1 for t in sent.tokens]  # -1 = root
        labels = [t.deprel for t in sent.tokens]
        if not _is_projective(heads):
            continue
        # treat the root dependent's "head" as a virtual right reduction target:
        # run the oracle over non-root arcs, then the last item reduces to root.
        steps = _gold_transitions(words, tags, heads, labels)
        if steps:
            data.append(steps)
    rng = random.Random(seed)
    for _ in range(epochs):
        for steps in shuffled(data, rng):
            for feats, gold in steps:
                guess = model.score(feats)
                model.update(gold, guess, feats)
    model.average()
    return ParserModel(
        perceptron=model,
        version=version,
        corpus_hash=corpus_fingerprint(sentences),
        epochs=epochs,
    )


def parse_tagged(words: list[str], tags: list[str], model: ParserModel) -> list[DependencyArc]:
    n = len(words)
    if n == 0:
        return []
    if n == 1:
        return [DependencyArc(ROOT, 0, "root")]
    arcs: list[DependencyArc] = []
    stack: list[int] = []
    buffer_pos = 0
    max_steps = 4 * n + 8
    steps = 0
    while (buffer_pos < n or len(stack) > 1) and steps < max_steps:
        steps += 1
        allowed = []
        if buffer_pos < n:
            allowed.append(SHIFT)
        if len(stack) >= 2:
            allowed.extend(c for c in model.perceptron.classes if c != SHIFT)
        if not allowed:
            break
        feats = _features(words, tags, stack, buffer_pos, n)
        trans = model.perceptron.score(feats, allowed=allowed)
        if trans != SHIFT:
            s0, s1 = stack[-1], stack[-2]
            if trans.startswith("L:"):
                arcs.append(DependencyArc(s0, s1, trans[2:]))
            else:
                arcs.append(DependencyArc(s1, s0, trans[2:]))
        stack, buffer_pos = _apply(trans, stack, buffer_pos)
    # the single remaining stack item is the sentence root
    attached = {a.dependent for a in arcs}
    root_token = stack[-1] if stack else 0
    arcs.append(DependencyArc(ROOT, root_token, "root"))
    attached.add(root_token)
    for i in range(n):  # orphans (should not happen) hang off the root token
        if i not in attached:
            arcs.append(DependencyArc(root_token, i, "dep"))
    return arcs
