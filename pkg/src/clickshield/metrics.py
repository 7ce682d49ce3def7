"""Classification metrics: accuracy/precision/recall/F1 at a threshold
and ROC AUC with ties counted one half."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field


class MetricsError(Exception):
    pass


@dataclass
class Confusion:
    tp: int = 0
    fp: int = 0
    tn: int = 0
    fn: int = 0

    def add(self, other: "Confusion") -> None:
        self.tp += other.tp
        self.fp += other.fp
        self.tn += other.tn
        self.fn += other.fn


@dataclass
class EvalReport:
    accuracy: float
    precision: float
    recall: float
    f1: float
    roc_auc: float
    confusion: Confusion
    per_fold: list[dict] = field(default_factory=list)


def confusion_counts(labels: list[int], scores: list[float], threshold: float) -> Confusion:
    c = Confusion()
    for y, s in zip(labels, scores):
        predicted = 1 if s > threshold else 0
        if y == 1 and predicted == 1:
            c.tp += 1
        elif y == 1:
            c.fn += 1
        elif predicted == 1:
            c.fp += 1
        else:
            c.tn += 1
    return c


def roc_auc(labels: list[int], scores: list[float]) -> float:
    """Probability that a random positive outranks a random negative,
    ties counted 1/2. Grouped counting; exactly equals the O(n^2)
    pairwise definition."""
    pos_total = sum(1 for y in labels if y == 1)
    neg_total = len(labels) - pos_total
    if pos_total == 0 or neg_total == 0:
        raise MetricsError("ROC AUC undefined for a single-class label list")
    by_score: dict[float, list[int]] = defaultdict(lambda: [0, 0])
    for y, s in zip(labels, scores):
        by_score[s][y] += 1
    wins = 0.0
    neg_below = 0
    for s in sorted(by_score):
        neg_here, pos_here = by_score[s]
        wins += pos_here * neg_below + 0.5 * pos_here * neg_here
        neg_below += neg_here
    return wins / (pos_total * neg_total)


def compute_metrics(
    labels: list[int], scores: list[float], threshold: float = 0.5
) -> EvalReport:
    if len(labels) != len(scores):
        raise MetricsError("labels and scores must have equal length")
    c = confusion_counts(labels, scores, threshold)
    return EvalReport(
        accuracy=(c.tp + c.tn) / max(len(labels), 1),
        precision=c.tp / max(c.tp + c.fp, 1) if (c.tp + c.fp) else 0.0,
        recall=c.tp / max(c.tp + c.fn, 1) if (c.tp + c.fn) else 0.0,
        f1=2 * c.tp / max(2 * c.tp + c.fp + c.fn, 1) if c.tp else 0.0,
        roc_auc=roc_auc(labels, scores),
        confusion=c,
    )
