"""Scoring cluster assignments and running seeded restart experiments."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .clustering import ClusterConfig, fcm_fit, hierarchical_fit, kmeans_fit, kmodes_fit
from .clustering.hierarchical import row_distances
from .dataset import CategoricalDataset
from .errors import ConfigurationError, DimensionError, EvaluationError
from .space import DistanceKind, build_distance, build_similarity

__all__ = [
    "ALGORITHMS",
    "ContingencyTable",
    "ExperimentSpec",
    "ReportCell",
    "contingency",
    "accuracy",
    "restart_seed",
    "build_embedding",
    "fit",
    "run_experiment",
]

ALGORITHMS = ("kmeans", "fcm", "hierarchical", "kmodes")


@dataclass(frozen=True, eq=False)
class ContingencyTable:
    """``counts[i, j]`` objects of produced cluster ``clusters[i]`` in class ``classes[j]``."""

    counts: np.ndarray
    clusters: np.ndarray
    classes: np.ndarray

    @property
    def s(self) -> int:
        return self.counts.shape[0]

    @property
    def k_prime(self) -> int:
        return self.counts.shape[1]


def _labels_of(assignment):
    return np.asarray(getattr(assignment, "labels", assignment))


def contingency(assignment, labels) -> ContingencyTable:
    """Cross-tabulate produced clusters against true classes."""
    if labels is None:
        raise EvaluationError("no ground-truth labels to compare against")
    pred = _labels_of(assignment).ravel()
    true = np.asarray(labels).ravel()
    if pred.shape != true.shape:
        raise DimensionError(f"{pred.size} assignments but {true.size} labels")
    if pred.size == 0:
        raise DimensionError("cannot score an empty assignment")
    clusters, ci = np.unique(pred, return_inverse=True)
    classes, ki = np.unique(true, return_inverse=True)
    counts = np.zeros((clusters.size, classes.size), dtype=np.int64)
    np.add.at(counts, (ci, ki), 1)
    return ContingencyTable(counts, clusters, classes)


def accuracy(assignment, labels) -> float:
    """Fraction of objects that belong to the majority class of their cluster.

    Every produced cluster is credited with its largest single-class count,
    with no one-to-one matching between clusters and classes, so splitting a
    cluster can never lower the score.
    """
    table = contingency(assignment, labels)
    return float(table.counts.max(axis=1).sum() / table.counts.sum())


def restart_seed(master_seed: int, restart: int) -> int:
    """Seed of one restart: numpy's SeedSequence hash of ``(master_seed, restart)``."""
    seq = np.random.SeedSequence([int(master_seed), int(restart)])
    return int(seq.generate_state(1, dtype=np.uint64)[0])


@dataclass(frozen=True)
class ExperimentSpec:
    """One cell of the benchmark grid.

    ``k`` defaults to the number of classes in the dataset. ``distance`` is
    ignored by k-modes, which clusters the raw categories.
    """

    algorithm: str
    distance: DistanceKind = DistanceKind.SBD
    restarts: int = 100
    master_seed: int = 0
    k: Optional[int] = None
    max_iterations: int = 300
    tolerance: float = 1e-6
    fuzzifier: float = 2.0
    linkage: str = "average"

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ConfigurationError(f"unknown algorithm {self.algorithm!r}; choose from {', '.join(ALGORITHMS)}")
        object.__setattr__(self, "distance", DistanceKind.parse(self.distance))
        if int(self.restarts) != self.restarts or self.restarts < 1:
            raise ConfigurationError("restarts must be >= 1")

    @property
    def distance_label(self) -> str:
        return "-" if self.algorithm == "kmodes" else self.distance.value

    def config(self, k: int, seed: int) -> ClusterConfig:
        return ClusterConfig(
            k=k,
            max_iterations=self.max_iterations,
            tolerance=self.tolerance,
            seed=seed,
            fuzzifier=self.fuzzifier,
            linkage=self.linkage,
        )


@dataclass(frozen=True, eq=False)
class ReportCell:
    dataset: str
    algorithm: str
    distance: str
    mean_accuracy: float
    std_accuracy: float
    restarts: int
    seed: int
    seconds: float
    accuracies: tuple = field(default=(), repr=False)
    error: str = ""

    @property
    def ok(self) -> bool:
        return not self.error

    def key(self):
        """Everything except wall time, for determinism comparisons."""
        return (self.dataset, self.algorithm, self.distance, self.mean_accuracy,
                self.std_accuracy, self.restarts, self.seed, self.accuracies, self.error)


def build_embedding(ds: CategoricalDataset, distance) -> np.ndarray:
    """Distance-matrix rows used as feature vectors for clustering."""
    return build_distance(build_similarity(ds), distance).entries


def fit(algorithm: str, data, config: ClusterConfig, distances=None):
    """Dispatch to a clusterer; ``data`` is a dataset for k-modes, an embedding otherwise.

    ``distances`` is forwarded to the hierarchical clusterer only.
    """
    if algorithm == "kmeans":
        return kmeans_fit(data, config)
    if algorithm == "fcm":
        return fcm_fit(data, config)
    if algorithm == "hierarchical":
        return hierarchical_fit(data, config, distances=distances)
    if algorithm == "kmodes":
        return kmodes_fit(data, config)
    raise ConfigurationError(f"unknown algorithm {algorithm!r}")


def run_experiment(
    ds: CategoricalDataset,
    spec: ExperimentSpec,
    dataset_id: str = "",
    embedding: Optional[np.ndarray] = None,
) -> ReportCell:
    """Mean and spread of accuracy over ``spec.restarts`` seeded restarts.

    The embedding is built once (or taken from ``embedding``) and shared by
    all restarts; restart ``r`` runs with ``restart_seed(master_seed, r)``.
    The standard deviation is the population one (ddof=0).
    """
    if ds.labels is None:
        raise EvaluationError("run_experiment needs a labeled dataset")
    k = spec.k if spec.k is not None else ds.n_classes
    start = time.perf_counter()
    if spec.algorithm == "kmodes":
        data = ds
    elif embedding is not None:
        data = embedding
    else:
        data = build_embedding(ds, spec.distance)

    distances = row_distances(data) if spec.algorithm == "hierarchical" else None
    scores = []
    for r in range(spec.restarts):
        config = spec.config(k, restart_seed(spec.master_seed, r))
        result = fit(spec.algorithm, data, config, distances)
        scores.append(accuracy(result, ds.labels))
    scores = np.array(scores)
    return ReportCell(
        dataset=dataset_id,
        algorithm=spec.algorithm,
        distance=spec.distance_label,
        mean_accuracy=float(scores.mean()),
        std_accuracy=float(scores.std()),
        restarts=spec.restarts,
        seed=int(spec.master_seed),
        seconds=time.perf_counter() - start,
        accuracies=tuple(float(s) for s in scores),
    )
