from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._common import ClusterConfig, check_data, initial_indices, sq_distances


@dataclass(frozen=True, eq=False)
class FCMResult:
    memberships: np.ndarray
    labels: np.ndarray
    k: int
    centers: np.ndarray
    objective: float
    n_iter: int
    converged: bool
    objective_history: tuple


def memberships(d2: np.ndarray, fuzzifier: float) -> np.ndarray:
    """Optimal fuzzy memberships for fixed squared distances ``d2`` (N, k).

    ``u[i, c]`` is proportional to ``d2[i, c] ** (-1 / (m - 1))``; a row that
    sits exactly on a center belongs to it alone (first such center on ties).
    """
    n, k = d2.shape
    u = np.empty_like(d2)
    zero = d2 <= 0
    hit = zero.any(axis=1)
    if hit.any():
        u[hit] = 0.0
        u[hit, np.argmax(zero[hit], axis=1)] = 1.0
    rest = ~hit
    if rest.any():
        # log-space softmax avoids overflow for tiny distances
        w = -np.log(d2[rest]) / (fuzzifier - 1.0)
        w -= w.max(axis=1, keepdims=True)
        e = np.exp(w)
        u[rest] = e / e.sum(axis=1, keepdims=True)
    return u


def harden(u: np.ndarray) -> np.ndarray:
    """Crisp labels from memberships, with no cluster left empty.

    Each row takes its largest membership (lowest index on ties). An empty
    cluster then claims the row with the highest membership in it among rows
    whose cluster keeps other members.
    """
    n, k = u.shape
    labels = np.argmax(u, axis=1)
    for _ in range(k):
        counts = np.bincount(labels, minlength=k)
        empty = np.flatnonzero(counts == 0)
        if empty.size == 0:
            break
        c = empty[0]
        score = u[:, c].copy()
        score[counts[labels] <= 1] = -np.inf
        labels[int(np.argmax(score))] = c
    return labels


def fcm_fit(X, config: ClusterConfig) -> FCMResult:
    """Fuzzy c-means by alternating optimization.

    Centers start at ``k`` distinct rows drawn with ``config.seed``. Each
    round moves the centers to the ``u**m``-weighted means and recomputes the
    memberships; iteration stops when no membership changes by more than
    ``config.tolerance``.
    """
    X = check_data(X, config)
    m = config.fuzzifier
    centers = X[initial_indices(X.shape[0], config)].copy()
    u = memberships(sq_distances(X, centers), m)

    history = []
    converged = False
    n_iter = 0
    for n_iter in range(1, config.max_iterations + 1):
        w = u**m
        mass = w.sum(axis=0)
        live = mass > 0
        centers[live] = (w.T[live] @ X) / mass[live, None]
        d2 = sq_distances(X, centers)
        history.append(float(np.sum(w * d2)))
        u_new = memberships(d2, m)
        delta = np.max(np.abs(u_new - u))
        u = u_new
        if delta <= config.tolerance:
            converged = True
            break

    objective = float(np.sum(u**m * sq_distances(X, centers)))
    return FCMResult(u, harden(u), config.k, centers, objective, n_iter, converged, tuple(history))
