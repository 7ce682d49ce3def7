"""Multinomial Naive Bayes auxiliary scorers.

One model per feature family (subjects, word/POS/syntactic N-grams).
The score is the log-odds log P(clickbait|items) - log P(non|items),
used downstream as a numeric meta-feature.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .corpus import Label

FAMILIES = ("subject", "word_ngram", "pos_ngram", "syn_ngram")


@dataclass
class NaiveBayesModel:
    family: str
    log_prior: dict[str, float]  # class value -> log prior
    log_probs: dict  # item -> {class value: log P(item|class)}
    log_unseen: dict[str, float]  # class value -> log P(unseen item|class)
    alpha: float
    vocabulary_size: int

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "log_prior": self.log_prior,
            "log_probs": [[list(k) if isinstance(k, tuple) else k, v] for k, v in self.log_probs.items()],
            "log_unseen": self.log_unseen,
            "alpha": self.alpha,
            "vocabulary_size": self.vocabulary_size,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "NaiveBayesModel":
        probs = {}
        for key, value in data["log_probs"]:
            probs[tuple(key) if isinstance(key, list) else key] = value
        return cls(
            family=data["family"],
            log_prior=data["log_prior"],
            log_probs=probs,
            log_unseen=data["log_unseen"],
            alpha=data["alpha"],
            vocabulary_size=data["vocabulary_size"],
        )


def train_nb(
    family: str,
    examples: list[tuple[Label, Counter]],
    alpha: float = 1.0,
) -> NaiveBayesModel:
    """examples: (label, multiset of items) per headline. Laplace-style
    smoothing with the given alpha; priors from class frequencies."""
    if alpha <= 0:
        raise ValueError("alpha must be > 0")
    class_counts = Counter(label for label, _ in examples)
    if any(class_counts[l] == 0 for l in Label):
        raise ValueError(f"{family}: a class is absent from training data")
    total = sum(class_counts.values())
    log_prior = {l.value: math.log(class_counts[l] / total) for l in Label}

    item_counts: dict[str, Counter] = {l.value: Counter() for l in Label}
    vocab = set()
    for label, items in examples:
        item_counts[label.value].update(items)
        vocab.update(items)
    v = len(vocab)
    totals = {c: sum(cnt.values()) for c, cnt in item_counts.items()}
    log_probs: dict = {}
    for item in sorted(vocab):
        log_probs[item] = {
            c: math.log((item_counts[c][item] + alpha) / (totals[c] + alpha * v))
            for c in item_counts
        }
    log_unseen = {
        c: math.log(alpha / (totals[c] + alpha * v)) for c in item_counts
    }
    return NaiveBayesModel(
        family=family,
        log_prior=log_prior,
        log_probs=log_probs,
        log_unseen=log_unseen,
        alpha=alpha,
        vocabulary_size=v,
    )


def score_nb(model: NaiveBayesModel, items: Counter) -> float:
    """Log-odds of clickbait vs non-clickbait; the empty multiset
    returns the prior log-odds."""
    pos, neg = Label.CLICKBAIT.value, Label.NEWS.value
    score = model.log_prior[pos] - model.log_prior[neg]
    for item, count in items.items():
        probs = model.log_probs.get(item)
        if probs is None:
            score += count * (model.log_unseen[pos] - model.log_unseen[neg])
        else:
            score += count * (probs[pos] - probs[neg])
    return score
