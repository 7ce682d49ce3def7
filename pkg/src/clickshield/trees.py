"""Decision tree (Gini impurity, greedy splits) and bootstrap random
forest. Trees consume raw feature values; splits are scale-invariant."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

import numpy as np


@dataclass
class TreeNode:
    feature: int | None = None
    threshold: float | None = None
    left: "TreeNode | None" = None
    right: "TreeNode | None" = None
    # leaf payload: probability of the positive (clickbait) class
    prob_positive: float | None = None

    def is_leaf(self) -> bool:
        return self.prob_positive is not None

    def to_dict(self) -> dict:
        if self.is_leaf():
            return {"p": self.prob_positive}
        return {
            "f": self.feature,
            "t": self.threshold,
            "l": self.left.to_dict(),
            "r": self.right.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TreeNode":
        if "p" in data:
            return cls(prob_positive=data["p"])
        return cls(
            feature=data["f"],
            threshold=data["t"],
            left=cls.from_dict(data["l"]),
            right=cls.from_dict(data["r"]),
        )


@dataclass
class TreeModel:
    root: TreeNode
    max_depth: int | None
    min_leaf: int

    def to_dict(self) -> dict:
        return {
            "kind": "tree",
            "max_depth": self.max_depth,
            "min_leaf": self.min_leaf,
            "root": self.root.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TreeModel":
        return cls(
            root=TreeNode.from_dict(data["root"]),
            max_depth=data["max_depth"],
            min_leaf=data["min_leaf"],
        )


@dataclass
class ForestModel:
    trees: list[TreeModel]
    seeds: list[int]
    n_features_per_split: int

    def to_dict(self) -> dict:
        return {
            "kind": "forest",
            "seeds": self.seeds,
            "n_features_per_split": self.n_features_per_split,
            "trees": [t.to_dict() for t in self.trees],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ForestModel":
        return cls(
            trees=[TreeModel.from_dict(t) for t in data["trees"]],
            seeds=data["seeds"],
            n_features_per_split=data["n_features_per_split"],
        )


def _gini(pos: int, total: int) -> float:
    if total == 0:
        return 0.0
    p = pos / total
    return 2.0 * p * (1.0 - p)


def _best_split(x, y, feature_indices, min_leaf):
    n = len(y)
    best = None  # (impurity, feature, threshold)
    total_pos = int(y.sum())
    for f in feature_indices:
        order = np.argsort(x[:, f], kind="stable")
        xv = x[order, f]
        yv = y[order]
        pos_left = 0
        for i in range(1, n):
            pos_left += int(yv[i - 1])
            if xv[i] == xv[i - 1]:
                continue
            n_left = i
            n_right = n - i
            if n_left < min_leaf or n_right < min_leaf:
                continue
            imp = (
                n_left * _gini(pos_left, n_left)
                + n_right * _gini(total_pos - pos_left, n_right)
            ) / n
            threshold = (xv[i] + xv[i - 1]) / 2.0
            cand = (imp, f, threshold)
            if best is None or cand < best:
                best = cand
    return best


def _grow(x, y, depth, max_depth, min_leaf, rng, n_subset):
    n = len(y)
    pos = int(y.sum())
    if pos == 0 or pos == n or (max_depth is not None and depth >= max_depth) or n < 2 * min_leaf:
        return TreeNode(prob_positive=pos / n)
    d = x.shape[1]
    if n_subset is not None and n_subset < d:
        feats = sorted(rng.sample(range(d), n_subset))
    else:
        feats = list(range(d))
    best = _best_split(x, y, feats, min_leaf)
    if best is None:
        return TreeNode(prob_positive=pos / n)
    _, f, threshold = best
    mask = x[:, f] <= threshold
    return TreeNode(
        feature=f,
        threshold=threshold,
        left=_grow(x[mask], y[mask], depth + 1, max_depth, min_leaf, rng, n_subset),
        right=_grow(x[~mask], y[~mask], depth + 1, max_depth, min_leaf, rng, n_subset),
    )


def train_tree(
    x: np.ndarray,
    y: np.ndarray,
    max_depth: int | None = None,
    min_leaf: int = 2,
) -> TreeModel:
    """y in {0, 1}; 1 = clickbait."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=int)
    if len(y) == 0:
        raise ValueError("empty training set")
    root = _grow(x, y, 0, max_depth, min_leaf, random.Random(0), None)
    return TreeModel(root=root, max_depth=max_depth, min_leaf=min_leaf)


def tree_decision(model: TreeModel, x: np.ndarray) -> np.ndarray:
    x = np.atleast_2d(np.asarray(x, dtype=float))
    out = np.empty(x.shape[0])
    for i, row in enumerate(x):
        node = model.root
        while not node.is_leaf():
            node = node.left if row[node.feature] <= node.threshold else node.right
        out[i] = node.prob_positive
    return out


def train_forest(
    x: np.ndarray,
    y: np.ndarray,
    n_trees: int = 100,
    seed: int = 0,
    max_depth: int | None = None,
    min_leaf: int = 2,
    bootstrap: bool = True,
) -> ForestModel:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=int)
    if len(y) == 0:
        raise ValueError("empty training set")
    d = x.shape[1]
    n_subset = max(1, math.ceil(math.sqrt(d))) if bootstrap else None
    master = random.Random(seed)
    seeds = [master.randrange(2**31) for _ in range(n_trees)]
    trees = []
    n = len(y)
    for tree_seed in seeds:
        rng = random.Random(tree_seed)
        if bootstrap:
            idx = [rng.randrange(n) for _ in range(n)]
            xb, yb = x[idx], y[idx]
        else:
            xb, yb = x, y
        root = _grow(xb, yb, 0, max_depth, min_leaf, rng, n_subset)
        trees.append(TreeModel(root=root, max_depth=max_depth, min_leaf=min_leaf))
    return ForestModel(trees=trees, seeds=seeds, n_features_per_split=n_subset or d)


def forest_decision(model: ForestModel, x: np.ndarray) -> np.ndarray:
    x = np.atleast_2d(np.asarray(x, dtype=float))
    scores = np.zeros(x.shape[0])
    for tree in model.trees:
        scores += tree_decision(tree, x)
    return scores / len(model.trees)
