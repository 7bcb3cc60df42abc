"""
A small benchmark grid
======================

Every clusterer is paired with every embedding distance and scored by the
mean accuracy over seeded restarts.
"""

from pathlib import Path

from catspace import ExperimentSpec
from catspace.benchmark import load_manifest, run_benchmark, sbd_best_or_tied

data = Path(__file__).resolve().parents[1] / "data"
entries = [e for e in load_manifest(data / "manifest.csv") if e.name in ("lenses", "balloon", "promoters")]

# ten restarts keep this quick; the reference protocol uses 100
report = run_benchmark(entries, ExperimentSpec("kmeans", restarts=10, master_seed=0))

for cell, best in zip(report, report.best()):
    mark = "*" if best else " "
    print(f"{mark} {cell.dataset:<10} {cell.algorithm:<13} {cell.distance:<10} "
          f"{cell.mean_accuracy:.3f} +/- {cell.std_accuracy:.3f}")

###############################################################################
# Where does the similarity-based distance win?

for algorithm in ("kmeans", "fcm", "hierarchical"):
    print(algorithm, sbd_best_or_tied(report, algorithm))
