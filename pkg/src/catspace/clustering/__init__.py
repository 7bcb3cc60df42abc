"""Clusterers for embedded objects (k-means, fuzzy c-means, hierarchical)
and the k-modes baseline for raw categorical data."""

from ._common import LINKAGES, ClusterConfig
from .fcm import FCMResult, fcm_fit
from .hierarchical import HierarchicalResult, hierarchical_fit
from .kmeans import KMeansResult, kmeans_fit
from .kmodes import KModesResult, kmodes_fit

__all__ = [
    "LINKAGES",
    "ClusterConfig",
    "FCMResult",
    "HierarchicalResult",
    "KMeansResult",
    "KModesResult",
    "fcm_fit",
    "hierarchical_fit",
    "kmeans_fit",
    "kmodes_fit",
]
