"""RBF-kernel SVM trained with sequential minimal optimization.

Platt-style pair updates over the dual problem; deterministic for a
fixed seed. Feature standardization is part of the model so the same
transform is applied at training and prediction time.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np


@dataclass
class SvmModel:
    support_vectors: np.ndarray  # standardized, shape (m, d)
    support_labels: np.ndarray  # +-1
    alphas: np.ndarray
    bias: float
    C: float
    gamma: float
    mean: np.ndarray
    std: np.ndarray
    converged: bool = True

    def to_dict(self) -> dict:
        return {
            "kind": "svm",
            "support_vectors": self.support_vectors.tolist(),
            "support_labels": self.support_labels.tolist(),
            "alphas": self.alphas.tolist(),
            "bias": self.bias,
            "C": self.C,
            "gamma": self.gamma,
            "mean": self.mean.tolist(),
            "std": self.std.tolist(),
            "converged": self.converged,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SvmModel":
        return cls(
            support_vectors=np.array(data["support_vectors"], dtype=float),
            support_labels=np.array(data["support_labels"], dtype=float),
            alphas=np.array(data["alphas"], dtype=float),
            bias=data["bias"],
            C=data["C"],
            gamma=data["gamma"],
            mean=np.array(data["mean"], dtype=float),
            std=np.array(data["std"], dtype=float),
            converged=data["converged"],
        )


def standardize_fit(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    mean = x.mean(axis=0)
    std = x.std(axis=0)
    std[std == 0] = 1.0  # constant features pass through unscaled
    return mean, std


def default_gamma(x_std: np.ndarray) -> float:
    var = float(x_std.var(axis=0).mean())
    if var <= 0:
        var = 1.0
    return 1.0 / (x_std.shape[1] * var)


def _rbf_matrix(x: np.ndarray, gamma: float) -> np.ndarray:
    sq = np.sum(x * x, axis=1)
    d2 = sq[:, None] + sq[None, :] - 2.0 * (x @ x.T)
    np.maximum(d2, 0.0, out=d2)
    return np.exp(-gamma * d2)


def _pair_update(i, j, alphas, b, k, y, C):
    """One SMO coordinate-pair step; returns (changed, new_b)."""
    f_i = float(np.dot(alphas * y, k[i])) + b
    e_i = f_i - y[i]
    f_j = float(np.dot(alphas * y, k[j])) + b
    e_j = f_j - y[j]
    a_i_old, a_j_old = alphas[i], alphas[j]
    if y[i] != y[j]:
        low = max(0.0, a_j_old - a_i_old)
        high = min(C, C + a_j_old - a_i_old)
    else:
        low = max(0.0, a_i_old + a_j_old - C)
        high = min(C, a_i_old + a_j_old)
    if low >= high:
        return False, b
    eta = 2.0 * k[i, j] - k[i, i] - k[j, j]
    if eta >= 0:
        return False, b
    a_j = a_j_old - y[j] * (e_i - e_j) / eta
    a_j = min(high, max(low, a_j))
    if abs(a_j - a_j_old) < 1e-7:
        return False, b
    a_i = a_i_old + y[i] * y[j] * (a_j_old - a_j)
    alphas[i], alphas[j] = a_i, a_j
    b1 = b - e_i - y[i] * (a_i - a_i_old) * k[i, i] - y[j] * (a_j - a_j_old) * k[i, j]
    b2 = b - e_j - y[i] * (a_i - a_i_old) * k[i, j] - y[j] * (a_j - a_j_old) * k[j, j]
    if 0 < a_i < C:
        b = b1
    elif 0 < a_j < C:
        b = b2
    else:
        b = (b1 + b2) / 2.0
    return True, b


def _interval_bias(alphas, f0, y, C):
    """Midpoint of the bias interval the KKT inequalities allow; when the
    alphas are optimal every constraint is met, otherwise this choice
    minimizes the worst bias-attributable violation."""
    eps = 1e-9
    lower, upper = [], []
    for i in range(len(alphas)):
        at_zero = alphas[i] <= eps
        at_c = alphas[i] >= C - eps
        if y[i] > 0:
            bound = 1.0 - f0[i]
            if at_zero:
                lower.append(bound)
            elif at_c:
                upper.append(bound)
            else:
                lower.append(bound)
                upper.append(bound)
        else:
            bound = -1.0 - f0[i]
            if at_zero:
                upper.append(bound)
            elif at_c:
                lower.append(bound)
            else:
                lower.append(bound)
                upper.append(bound)
    if lower and upper:
        return (max(lower) + min(upper)) / 2.0
    if lower:
        return max(lower)
    if upper:
        return min(upper)
    return 0.0


def _violations(alphas, f0, b, y, C):
    eps = 1e-9
    margins = y * (f0 + b)
    out = np.empty(len(alphas))
    for i in range(len(alphas)):
        if alphas[i] <= eps:
            out[i] = 1.0 - margins[i]
        elif alphas[i] >= C - eps:
            out[i] = margins[i] - 1.0
        else:
            out[i] = abs(margins[i] - 1.0)
    return out


def train_svm_smo(
    x: np.ndarray,
    y: np.ndarray,
    C: float = 1.0,
    gamma: float | None = None,
    tol: float = 1e-3,
    max_passes: int = 10,
    seed: int = 0,
    max_total_passes: int = 400,
) -> SvmModel:
    """y in {-1, +1}. Returns the best-so-far model flagged non-converged
    if the optimization does not settle within max_total_passes sweeps."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if set(np.unique(y)) - {-1.0, 1.0}:
        raise ValueError("labels must be +-1")
    if len(set(y.tolist())) < 2:
        raise ValueError("need at least one example per class")
    mean, std = standardize_fit(x)
    xs = (x - mean) / std
    if gamma is None:
        gamma = default_gamma(xs)
    m = xs.shape[0]
    k = _rbf_matrix(xs, gamma)
    alphas = np.zeros(m)
    b = 0.0
    rng = random.Random(seed)
    passes = 0
    total = 0
    converged = True
    while passes < max_passes:
        total += 1
        if total > max_total_passes:
            converged = False
            break
        changed = 0
        for i in range(m):
            f_i = float(np.dot(alphas * y, k[i])) + b
            e_i = f_i - y[i]
            if (y[i] * e_i < -tol and alphas[i] < C) or (y[i] * e_i > tol and alphas[i] > 0):
                j = rng.randrange(m - 1)
                if j >= i:
                    j += 1
                did, b = _pair_update(i, j, alphas, b, k, y, C)
                changed += did
        passes = passes + 1 if changed == 0 else 0
    # Refinement: the sweep loop leaves small KKT violations behind
    # (its working errors drift with the running bias). Re-derive the
    # bias from the KKT inequalities, then chip away at the worst
    # violator with second-choice pair steps until everything is within
    # half of tol (margin left for float noise downstream).
    f0 = k @ (alphas * y)
    b = _interval_bias(alphas, f0, y, C)
    for _ in range(50 * m):
        viol = _violations(alphas, f0, b, y, C)
        worst = int(np.argmax(viol))
        if viol[worst] <= 0.5 * tol:
            break
        e = f0 + b - y
        order = np.argsort(-np.abs(e[worst] - e))
        progressed = False
        for j in order:
            if j == worst:
                continue
            did, _ = _pair_update(worst, int(j), alphas, b, k, y, C)
            if did:
                progressed = True
                break
        if not progressed:
            converged = False
            break
        f0 = k @ (alphas * y)
        b = _interval_bias(alphas, f0, y, C)
    else:
        converged = False
    keep = alphas > 1e-12
    return SvmModel(
        support_vectors=xs[keep],
        support_labels=y[keep],
        alphas=alphas[keep],
        bias=b,
        C=C,
        gamma=gamma,
        mean=mean,
        std=std,
        converged=converged,
    )


def svm_decision(model: SvmModel, x: np.ndarray) -> np.ndarray:
    """Real-valued decision scores; predicted label = sign."""
    x = np.atleast_2d(np.asarray(x, dtype=float))
    xs = (x - model.mean) / model.std
    if model.support_vectors.shape[0] == 0:
        return np.full(xs.shape[0], model.bias)
    sq_sv = np.sum(model.support_vectors**2, axis=1)
    sq_x = np.sum(xs**2, axis=1)
    d2 = sq_x[:, None] + sq_sv[None, :] - 2.0 * (xs @ model.support_vectors.T)
    np.maximum(d2, 0.0, out=d2)
    k = np.exp(-model.gamma * d2)
    return k @ (model.alphas * model.support_labels) + model.bias


def kkt_violation(model: SvmModel, x: np.ndarray, y: np.ndarray) -> float:
    """Largest KKT violation over the training set (0 = perfectly
    satisfied). Inputs are the raw (unstandardized) training data."""
    f = svm_decision(model, x)
    margins = np.asarray(y, dtype=float) * f
    # reconstruct each point's alpha: support vectors carry theirs
    xs = (np.asarray(x, dtype=float) - model.mean) / model.std
    worst = 0.0
    sv = model.support_vectors
    for i in range(xs.shape[0]):
        alpha = 0.0
        if sv.shape[0]:
            match = np.where(np.all(np.isclose(sv, xs[i], atol=1e-12), axis=1))[0]
            if match.size:
                alpha = float(model.alphas[match[0]])
        m = margins[i]
        if alpha <= 1e-9:
            worst = max(worst, 1.0 - m)  # should be >= 1
        elif alpha >= model.C - 1e-9:
            worst = max(worst, m - 1.0)  # should be <= 1
        else:
            worst = max(worst, abs(m - 1.0))
    return worst
