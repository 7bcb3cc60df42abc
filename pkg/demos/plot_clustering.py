"""
Clustering the embedding
========================

The rows of a distance matrix are ordinary numeric vectors, so k-means,
fuzzy c-means and agglomerative clustering apply directly. k-modes works on
the raw categories instead.
"""

from pathlib import Path

import numpy as np

from catspace import ClusterConfig, accuracy, build_embedding, load_dataset
from catspace import fcm_fit, hierarchical_fit, kmeans_fit, kmodes_fit

data = Path(__file__).resolve().parents[1] / "data"
ds = load_dataset(data / "promoters.csv")
print(f"{ds.n_objects} promoter sequences, {ds.n_attributes} positions, classes {ds.class_names}")

X = build_embedding(ds, "sbd")
config = ClusterConfig(k=2, seed=1)

###############################################################################
# Hard and fuzzy partitions
# -------------------------

km = kmeans_fit(X, config)
print("k-means iterations", km.n_iter, "accuracy", accuracy(km, ds.labels))

fcm = fcm_fit(X, config)
print("fcm accuracy", accuracy(fcm, ds.labels))
print("least confident memberships:\n", np.sort(fcm.memberships.max(axis=1))[:5])

###############################################################################
# Linkage choice for the agglomerative clusterer

for linkage in ("single", "complete", "average", "ward"):
    hc = hierarchical_fit(X, ClusterConfig(k=2, linkage=linkage))
    print(f"hierarchical {linkage:<8} accuracy {accuracy(hc, ds.labels):.3f}")

###############################################################################
# The categorical baseline

km_modes = kmodes_fit(ds, config)
print("k-modes accuracy", accuracy(km_modes, ds.labels))
