from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from ..errors import ConfigurationError, DimensionError

LINKAGES = ("single", "complete", "average", "ward")


@dataclass(frozen=True)
class ClusterConfig:
    """Parameters shared by all clusterers.

    ``fuzzifier`` is only read by fuzzy c-means and ``linkage`` only by the
    hierarchical clusterer.
    """

    k: int
    max_iterations: int = 300
    tolerance: float = 1e-6
    seed: int = 0
    fuzzifier: float = 2.0
    linkage: str = "average"

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 1:
            raise ConfigurationError(f"k must be a positive integer, got {self.k!r}")
        if int(self.max_iterations) != self.max_iterations or self.max_iterations < 1:
            raise ConfigurationError("max_iterations must be >= 1")
        if not self.tolerance > 0:
            raise ConfigurationError("tolerance must be > 0")
        if not self.fuzzifier > 1:
            raise ConfigurationError("fuzzifier must be > 1")
        if self.linkage not in LINKAGES:
            raise ConfigurationError(f"linkage must be one of {', '.join(LINKAGES)}, got {self.linkage!r}")
        if not 0 <= int(self.seed) < 2**64:
            raise ConfigurationError("seed must fit in 64 unsigned bits")

    def with_seed(self, seed: int) -> "ClusterConfig":
        return replace(self, seed=int(seed))


def check_data(X, config: ClusterConfig) -> np.ndarray:
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[0] < 1:
        raise DimensionError(f"expected a non-empty 2-d array, got shape {X.shape}")
    if config.k > X.shape[0]:
        raise ConfigurationError(f"k={config.k} exceeds the number of objects ({X.shape[0]})")
    return X


def initial_indices(n: int, config: ClusterConfig) -> np.ndarray:
    """k distinct object indices drawn uniformly with the configured seed."""
    rng = np.random.default_rng(int(config.seed))
    return rng.choice(n, size=config.k, replace=False)


def sq_distances(X, centers) -> np.ndarray:
    """Squared Euclidean distances, shape (N, k)."""
    out = np.empty((X.shape[0], centers.shape[0]))
    for c, center in enumerate(centers):
        diff = X - center
        out[:, c] = np.einsum("ij,ij->i", diff, diff)
    return out


def repair_empty(labels, k, cost_fn, reseed):
    """Give every empty cluster a member.

    For each empty cluster the object with the largest cost to its own center,
    among objects whose cluster has other members, becomes that cluster's new
    center and all objects are reassigned. ``cost_fn()`` returns the current
    (N, k) cost matrix and ``reseed(c, r)`` moves center ``c`` onto object
    ``r``. An object that still lands elsewhere after reseeding (a duplicate
    of another center) is placed in the cluster directly.
    """
    n = labels.shape[0]
    pinned = {}
    for _ in range(n + k):
        counts = np.bincount(labels, minlength=k)
        empty = np.flatnonzero(counts == 0)
        if empty.size == 0:
            return labels
        c = int(empty[0])
        cost = cost_fn()
        own = cost[np.arange(n), labels].astype(np.float64)
        own[counts[labels] <= 1] = -np.inf
        own[list(pinned)] = -np.inf
        r = int(np.argmax(own))
        reseed(c, r)
        labels = np.argmin(cost_fn(), axis=1)
        for obj, cluster in pinned.items():
            labels[obj] = cluster
        if not np.any(labels == c):
            labels[r] = c
            pinned[r] = c
    raise RuntimeError("could not fill empty clusters")
