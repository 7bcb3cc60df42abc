from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..dataset import CategoricalDataset
from ..errors import ConfigurationError
from ._common import ClusterConfig, initial_indices, repair_empty


@dataclass(frozen=True, eq=False)
class KModesResult:
    labels: np.ndarray
    k: int
    modes: np.ndarray
    cost: int
    n_iter: int
    converged: bool
    cost_history: tuple


def mismatches(cells: np.ndarray, modes: np.ndarray) -> np.ndarray:
    """(N, k) count of attributes where each object differs from each mode."""
    return (cells[:, None, :] != modes[None, :, :]).sum(axis=2)


def update_modes(cells: np.ndarray, labels: np.ndarray, k: int, modes: np.ndarray) -> np.ndarray:
    """Most frequent code per attribute in every cluster (lowest code on ties)."""
    out = modes.copy()
    for c in range(k):
        members = cells[labels == c]
        if len(members) == 0:
            continue
        for a in range(cells.shape[1]):
            out[c, a] = np.argmax(np.bincount(members[:, a]))
    return out


def kmodes_fit(ds: CategoricalDataset, config: ClusterConfig) -> KModesResult:
    """k-modes on the raw category codes of ``ds`` with 0-1 attribute mismatch.

    Modes start at ``k`` distinct objects drawn with ``config.seed``; objects
    join the mode with the fewest mismatches (ties to the lowest mode) and
    each mode moves to the per-attribute majority category of its members.
    Class labels on ``ds`` are never read.
    """
    cells = ds.cells
    n = cells.shape[0]
    k = config.k
    if k > n:
        raise ConfigurationError(f"k={k} exceeds the number of objects ({n})")
    modes = cells[initial_indices(n, config)].copy()

    def cost():
        return mismatches(cells, modes)

    def reseed(c, r):
        modes[c] = cells[r]

    labels = repair_empty(np.argmin(cost(), axis=1), k, cost, reseed)
    history = []
    converged = False
    n_iter = 0
    for n_iter in range(1, config.max_iterations + 1):
        modes[:] = update_modes(cells, labels, k, modes)
        d = cost()
        history.append(int(d[np.arange(n), labels].sum()))
        new = repair_empty(np.argmin(d, axis=1), k, cost, reseed)
        if np.array_equal(new, labels):
            converged = True
            break
        labels = new
    modes[:] = update_modes(cells, labels, k, modes)
    total = int(cost()[np.arange(n), labels].sum())
    return KModesResult(labels, k, modes, total, n_iter, converged, tuple(history))
