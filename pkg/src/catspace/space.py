"""Similarity and distance matrices over categorical objects.

Objects are first compared attribute by attribute to give an N x N matrix of
match counts. Each row of that matrix places an object in N-dimensional
space, and a distance function applied to pairs of rows yields the distance
matrix whose rows are then clustered like ordinary numeric data.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .dataset import CategoricalDataset
from .errors import ConfigurationError, DimensionError, DomainError

__all__ = [
    "DistanceKind",
    "SimilarityMatrix",
    "DistanceMatrix",
    "build_similarity",
    "sbd",
    "classic_distance",
    "pairwise_distances",
    "build_distance",
]

# bytes of scratch memory per broadcast block
_BLOCK_BYTES = 1 << 26


class DistanceKind(str, enum.Enum):
    SBD = "sbd"
    EUCLIDEAN = "euclidean"
    COSINE = "cosine"
    MANHATTAN = "manhattan"

    @classmethod
    def parse(cls, value) -> "DistanceKind":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            choices = ", ".join(k.value for k in cls)
            raise ConfigurationError(f"unknown distance {value!r}; choose from {choices}") from None

    def __str__(self):
        return self.value


@dataclass(frozen=True, eq=False)
class SimilarityMatrix:
    """Attribute-match counts between every pair of objects."""

    entries: np.ndarray
    n_attributes: int

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def __array__(self, dtype=None, copy=None):
        return self.entries if dtype is None else self.entries.astype(dtype)


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Pairwise distances between similarity rows.

    Row ``i`` doubles as the N-dimensional embedding of object ``i``.
    """

    entries: np.ndarray
    kind: DistanceKind

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @property
    def embedding(self) -> np.ndarray:
        return self.entries

    def __array__(self, dtype=None, copy=None):
        return self.entries if dtype is None else self.entries.astype(dtype)


def build_similarity(ds: CategoricalDataset) -> SimilarityMatrix:
    """Count, for every pair of objects, the attributes on which they agree."""
    cells = ds.cells
    n, m = cells.shape
    entries = np.zeros((n, n), dtype=np.int64)
    for col in cells.T:
        entries += col[:, None] == col[None, :]
    entries.setflags(write=False)
    return SimilarityMatrix(entries, m)


def _pair(x, y):
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.ndim != 1 or x.shape != y.shape:
        raise DimensionError(f"vectors must be 1-d with equal length, got {x.shape} and {y.shape}")
    return x, y


def sbd(x, y) -> float:
    """Similarity-based distance between two similarity rows.

    Each coordinate contributes ``(x_i - y_i)**2 / (x_i * y_i)``, with the
    denominator replaced by 1 when either coordinate is zero, so a given
    difference counts for less between objects that share more.
    """
    x, y = _pair(x, y)
    den = x * y
    den[(x == 0) | (y == 0)] = 1.0
    return float(np.sqrt(np.sum((x - y) ** 2 / den)))


def classic_distance(kind, x, y) -> float:
    """Euclidean, cosine or Manhattan distance between two vectors.

    The cosine variant is ``sqrt(2 * (1 - cos(x, y)))``, evaluated as the
    chord between the unit vectors ``x/|x|`` and ``y/|y|`` (the same value,
    without cancellation when the vectors are nearly parallel).
    """
    kind = DistanceKind.parse(kind)
    x, y = _pair(x, y)
    if kind is DistanceKind.EUCLIDEAN:
        return float(np.sqrt(np.sum((x - y) ** 2)))
    if kind is DistanceKind.MANHATTAN:
        return float(np.sum(np.abs(x - y)))
    if kind is DistanceKind.COSINE:
        nx, ny = np.linalg.norm(x), np.linalg.norm(y)
        if nx == 0 or ny == 0:
            raise DomainError("cosine distance is undefined for a zero vector")
        return float(np.sqrt(np.sum((x / nx - y / ny) ** 2)))
    raise ConfigurationError(f"{kind} is not a classic distance; use sbd()")


def _blocks(n, width):
    step = max(1, _BLOCK_BYTES // (8 * max(1, n * width)))
    for start in range(0, n, step):
        yield start, min(n, start + step)


def _broadcast_upper(X, reduce_pair):
    """Fill the upper triangle blockwise with ``reduce_pair(rows, rest)``."""
    n, width = X.shape
    out = np.zeros((n, n), dtype=np.float64)
    for lo, hi in _blocks(n, width):
        out[lo:hi, lo:] = reduce_pair(X[lo:hi, None, :], X[None, lo:, :])
    return out


def _sbd_pair(a, b):
    den = a * b
    den = np.where((a == 0) | (b == 0), 1.0, den)
    return np.sqrt(np.sum((a - b) ** 2 / den, axis=-1))


def _manhattan_pair(a, b):
    return np.sum(np.abs(a - b), axis=-1)


def pairwise_distances(X, kind) -> np.ndarray:
    """Symmetric matrix of distances between the rows of ``X``.

    Only the upper triangle is computed; the result is mirrored and its
    diagonal is exactly zero.
    """
    kind = DistanceKind.parse(kind)
    X = np.asarray(X)
    if X.ndim != 2:
        raise DimensionError(f"expected a 2-d array, got shape {X.shape}")
    exact = np.issubdtype(X.dtype, np.integer)
    Xf = X.astype(np.float64)

    if kind is DistanceKind.SBD:
        if np.any(Xf < 0):
            raise DomainError("SBD expects non-negative coordinates")
        upper = _broadcast_upper(Xf, _sbd_pair)
    elif kind is DistanceKind.MANHATTAN:
        upper = _broadcast_upper(Xf, _manhattan_pair)
    elif kind is DistanceKind.EUCLIDEAN:
        if exact:
            # integer Gram matrix keeps squared distances exact
            Xi = X.astype(np.int64)
            sq = np.einsum("ij,ij->i", Xi, Xi)
            d2 = sq[:, None] + sq[None, :] - 2 * (Xi @ Xi.T)
            upper = np.sqrt(np.triu(d2, 1).astype(np.float64))
        else:
            upper = _broadcast_upper(Xf, lambda a, b: np.sqrt(np.sum((a - b) ** 2, axis=-1)))
    else:
        norms = np.linalg.norm(Xf, axis=1)
        if np.any(norms == 0):
            raise DomainError("cosine distance is undefined for a zero row")
        U = Xf / norms[:, None]
        upper = _broadcast_upper(U, lambda a, b: np.sqrt(np.sum((a - b) ** 2, axis=-1)))

    upper = np.triu(upper, 1)
    return upper + upper.T


def build_distance(S: SimilarityMatrix, kind) -> DistanceMatrix:
    """Distance matrix between the rows of a similarity matrix."""
    kind = DistanceKind.parse(kind)
    entries = pairwise_distances(np.asarray(S), kind)
    entries.setflags(write=False)
    return DistanceMatrix(entries, kind)
