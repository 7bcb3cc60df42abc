"""
From categories to coordinates
==============================

Four objects described by pressure, volume and temperature are turned into
points in four-dimensional space.
"""

import io

import numpy as np

from catspace import DistanceKind, IngestOptions, build_distance, build_similarity, load_dataset

table = "High,Medium,High\nLow,Low,High\nHigh,High,Low\nMedium,Low,High\n"
ds = load_dataset(io.StringIO(table), IngestOptions(label_column=None))
print("integer codes per attribute:\n", ds.cells)

###############################################################################
# Counting agreements
# -------------------
# Entry (i, j) counts the attributes on which objects i and j take the same
# value. The diagonal is the number of attributes.

S = build_similarity(ds)
print("similarity matrix:\n", S.entries)

###############################################################################
# Distances between rows
# ----------------------
# Row i of the similarity matrix is the position of object i. The
# similarity-based distance divides each squared difference by the product
# of the two coordinates, so a gap of one shared attribute matters less
# between objects that already share a lot.

np.set_printoptions(precision=4, suppress=True)
for kind in DistanceKind:
    print(f"{kind} distance matrix:\n", build_distance(S, kind).entries)

print("objects 1 and 2 under sbd:", build_distance(S, "sbd").entries[0, 1], "=", np.sqrt(25 / 6))
