"""Clustering categorical data through a similarity-based space structure.

Categorical objects are compared attribute by attribute, each object is
placed at its row of the resulting similarity matrix, and a distance matrix
over those rows (similarity-based distance, Euclidean, cosine or Manhattan)
provides numeric features for k-means, fuzzy c-means or hierarchical
clustering. A k-modes baseline and an accuracy benchmark are included.
"""

from .benchmark import ExperimentReport, ManifestEntry, load_manifest, run_benchmark
from .clustering import (
    ClusterConfig,
    fcm_fit,
    hierarchical_fit,
    kmeans_fit,
    kmodes_fit,
)
from .dataset import CategoricalDataset, IngestOptions, category_domain, load_dataset
from .errors import (
    CatspaceError,
    ConfigurationError,
    DimensionError,
    DomainError,
    EvaluationError,
    IngestionError,
)
from .evaluation import (
    ContingencyTable,
    ExperimentSpec,
    ReportCell,
    accuracy,
    build_embedding,
    contingency,
    restart_seed,
    run_experiment,
)
from .space import (
    DistanceKind,
    DistanceMatrix,
    SimilarityMatrix,
    build_distance,
    build_similarity,
    classic_distance,
    pairwise_distances,
    sbd,
)

__version__ = "0.1.0"
