"""Averaged perceptron classifier used by both the POS tagger and the
transition parser. Weights are plain dicts keyed by (feature, class);
training is deterministic for a fixed seed and iteration order."""

from __future__ import annotations

import random
from collections import defaultdict
from typing import Iterable, Sequence


class AveragedPerceptron:
    def __init__(self, classes: Sequence[str]):
        self.classes = list(classes)
        self.weights: dict[str, dict[str, float]] = {}
        # accumulators for weight averaging
        self._totals: dict[tuple[str, str], float] = defaultdict(float)
        self._stamps: dict[tuple[str, str], int] = defaultdict(int)
        self._updates = 0

    def score(self, features: Iterable[str], allowed: Sequence[str] | None = None) -> str:
        scores = {c: 0.0 for c in (allowed if allowed is not None else self.classes)}
        for feat in features:
            per_class = self.weights.get(feat)
            if per_class is None:
                continue
            for cls, weight in per_class.items():
                if cls in scores:
                    scores[cls] += weight
        # deterministic tie break on class name
        return max(scores, key=lambda c: (scores[c], c))

    def update(self, truth: str, guess: str, features: Iterable[str]) -> None:
        self._updates += 1
        if truth == guess:
            return
        for feat in features:
            per_class = self.weights.setdefault(feat, {})
            for cls, delta in ((truth, 1.0), (guess, -1.0)):
                key = (feat, cls)
                current = per_class.get(cls, 0.0)
                self._totals[key] += (self._updates - self._stamps[key]) * current
                self._stamps[key] = self._updates
                per_class[cls] = current + delta

    def average(self) -> None:
        for feat, per_class in self.weights.items():
            for cls, weight in list(per_class.items()):
                key = (feat, cls)
                total = self._totals[key] + (self._updates - self._stamps[key]) * weight
                averaged = total / max(self._updates, 1)
                if averaged:
                    per_class[cls] = averaged
                else:
                    del per_class[cls]
        self._totals.clear()
        self._stamps.clear()

    def to_dict(self) -> dict:
        return {
            "classes": self.classes,
            "weights": {f: dict(pc) for f, pc in sorted(self.weights.items())},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "AveragedPerceptron":
        model = cls(data["classes"])
        model.weights = {f: dict(pc) for f, pc in data["weights"].items()}
        return model


def shuffled(items: list, rng: random.Random) -> list:
    out = list(items)
    rng.shuffle(out)
    return out
