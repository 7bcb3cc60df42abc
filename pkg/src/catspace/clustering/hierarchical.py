from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DimensionError
from ..space import DistanceKind, pairwise_distances
from ._common import ClusterConfig, check_data


@dataclass(frozen=True, eq=False)
class HierarchicalResult:
    labels: np.ndarray
    k: int
    merges: np.ndarray
    merge_distances: np.ndarray


def _lance_williams(linkage, dik, djk, dij, ni, nj, nk):
    if linkage == "single":
        return np.minimum(dik, djk)
    if linkage == "complete":
        return np.maximum(dik, djk)
    if linkage == "average":
        return (ni * dik + nj * djk) / (ni + nj)
    # ward, on unsquared Euclidean distances
    t = ni + nj + nk
    sq = ((ni + nk) * dik**2 + (nj + nk) * djk**2 - nk * dij**2) / t
    return np.sqrt(np.maximum(sq, 0.0))


def row_distances(X) -> np.ndarray:
    """Euclidean distances between embedding rows, as used for merging."""
    return pairwise_distances(np.asarray(X, dtype=np.float64), DistanceKind.EUCLIDEAN)


def hierarchical_fit(X, config: ClusterConfig, distances=None) -> HierarchicalResult:
    """Agglomerative clustering of the rows of ``X`` down to ``config.k`` clusters.

    Inter-row distances are Euclidean; ``config.linkage`` selects single,
    complete, average or Ward merging. Pass ``distances`` (from
    :func:`row_distances`) to reuse them across calls on the same ``X``.

    Clusters live in the slot of their lowest member. Among equally close
    pairs the one with the lowest slot indices merges first, so results are
    deterministic and ``config.seed`` is not used. ``merges[t]`` holds the
    two slots joined at step ``t`` (the survivor first) and
    ``merge_distances[t]`` their linkage distance. Labels are numbered by each
    cluster's lowest object index.
    """
    X = check_data(X, config)
    n, k = X.shape[0], config.k
    if distances is None:
        D = row_distances(X)
    else:
        D = np.array(distances, dtype=np.float64)
        if D.shape != (n, n):
            raise DimensionError(f"distances must be {n}x{n}, got {D.shape}")
    np.fill_diagonal(D, np.inf)
    sizes = np.ones(n)
    owner = np.arange(n)
    merges = np.empty((n - k, 2), dtype=np.int64)
    heights = np.empty(n - k)

    # nearest neighbour of every row (lowest column on ties)
    near = np.argmin(D, axis=1)
    near_d = D[np.arange(n), near]

    for step in range(n - k):
        i = int(np.argmin(near_d))
        j = int(near[i])
        heights[step] = near_d[i]
        merges[step] = (i, j)

        row = _lance_williams(config.linkage, D[i], D[j], D[i, j], sizes[i], sizes[j], sizes)
        row[i] = row[j] = np.inf
        D[i, :] = row
        D[:, i] = row
        D[j, :] = np.inf
        D[:, j] = np.inf
        sizes[i] += sizes[j]
        sizes[j] = 0
        owner[owner == j] = i
        near_d[j] = np.inf

        stale = (near == i) | (near == j)
        stale[i] = True
        stale[j] = False
        for r in np.flatnonzero(stale):
            near[r] = np.argmin(D[r])
            near_d[r] = D[r, near[r]]
        # rows whose neighbour was elsewhere may now prefer i
        fresh = ~stale & ((row < near_d) | ((row == near_d) & (i < near)))
        fresh[j] = False
        near[fresh] = i
        near_d[fresh] = row[fresh]

    # owner slots are each cluster's lowest object index, so sorting keeps first-appearance order
    _, labels = np.unique(owner, return_inverse=True)
    return HierarchicalResult(labels.astype(np.int64), k, merges, heights)
