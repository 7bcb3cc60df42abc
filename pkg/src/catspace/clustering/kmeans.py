from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._common import ClusterConfig, check_data, initial_indices, repair_empty, sq_distances


@dataclass(frozen=True, eq=False)
class KMeansResult:
    labels: np.ndarray
    k: int
    centers: np.ndarray
    inertia: float
    n_iter: int
    converged: bool
    inertia_history: tuple


def _means(X, labels, k):
    counts = np.bincount(labels, minlength=k).astype(np.float64)
    sums = np.zeros((k, X.shape[1]))
    np.add.at(sums, labels, X)
    return sums / counts[:, None]


def kmeans_fit(X, config: ClusterConfig) -> KMeansResult:
    """Lloyd's k-means on the rows of ``X``.

    Centers start at ``k`` distinct rows drawn with ``config.seed``. Rows go
    to the nearest center (ties to the lowest index), centers move to the
    mean of their rows, and the loop stops once assignments repeat or after
    ``config.max_iterations`` rounds. A cluster left empty is reseeded on the
    row lying farthest from its own center.

    ``inertia_history[t]`` is the within-cluster sum of squares after the
    center update of round ``t``; it never increases.
    """
    X = check_data(X, config)
    k = config.k
    centers = X[initial_indices(X.shape[0], config)].copy()

    def cost():
        return sq_distances(X, centers)

    def reseed(c, r):
        centers[c] = X[r]

    labels = repair_empty(np.argmin(cost(), axis=1), k, cost, reseed)
    history = []
    converged = False
    n_iter = 0
    for n_iter in range(1, config.max_iterations + 1):
        centers[:] = _means(X, labels, k)
        d2 = cost()
        history.append(float(d2[np.arange(X.shape[0]), labels].sum()))
        new = repair_empty(np.argmin(d2, axis=1), k, cost, reseed)
        if np.array_equal(new, labels):
            converged = True
            break
        labels = new
    centers[:] = _means(X, labels, k)
    inertia = float(cost()[np.arange(X.shape[0]), labels].sum())
    return KMeansResult(labels, k, centers, inertia, n_iter, converged, tuple(history))
