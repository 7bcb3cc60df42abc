"""Benchmark grid over several datasets: manifests, grid runs and reports.

The grid for every dataset is k-modes on the raw data plus each of k-means,
fuzzy c-means and hierarchical clustering on each of the four embeddings,
13 cells in all.
"""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, List, Optional

from .dataset import IngestOptions, load_dataset
from .errors import ConfigurationError
from .evaluation import ExperimentSpec, ReportCell, build_embedding, run_experiment
from .space import DistanceKind

__all__ = [
    "REPORT_COLUMNS",
    "ManifestEntry",
    "ExperimentReport",
    "load_manifest",
    "grid_specs",
    "run_benchmark",
    "sbd_best_or_tied",
]

REPORT_COLUMNS = (
    "dataset", "algorithm", "distance", "mean_accuracy", "std_accuracy",
    "restarts", "seed", "seconds", "best", "error",
)

EMBEDDED_ALGORITHMS = ("kmeans", "fcm", "hierarchical")
TIE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class ManifestEntry:
    name: str
    path: Path
    k: Optional[int]
    options: IngestOptions


def _optional_int(value, what, lineno):
    value = (value or "").strip()
    if value == "" or value.lower() == "none":
        return None
    try:
        return int(value)
    except ValueError:
        raise ConfigurationError(f"manifest line {lineno}: {what} must be an integer, got {value!r}") from None


def load_manifest(path) -> List[ManifestEntry]:
    """Read a benchmark manifest.

    The manifest is a CSV file with a header line and the columns ``name``,
    ``path``, ``k`` and ``label_column`` (an integer, ``last`` or
    ``none``); ``has_header``, ``missing_token``
    and ``delimiter`` may be added. Relative paths are resolved against the
    manifest's directory. Every listed file must exist.
    """
    path = Path(path)
    if not path.is_file():
        raise ConfigurationError(f"manifest {path} does not exist")
    base = path.parent
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        missing = {"name", "path"} - set(reader.fieldnames or ())
        if missing:
            raise ConfigurationError(f"manifest {path} lacks column(s): {', '.join(sorted(missing))}")
        entries = []
        for lineno, row in enumerate(reader, start=2):
            name = (row.get("name") or "").strip()
            rel = (row.get("path") or "").strip()
            if not name or not rel:
                raise ConfigurationError(f"manifest line {lineno}: name and path are required")
            file = Path(rel) if os.path.isabs(rel) else base / rel
            if not file.is_file():
                raise ConfigurationError(f"manifest line {lineno}: dataset file {file} does not exist")
            label = row.get("label_column")
            label = (label or "").strip()
            label_col = -1 if label in ("", "last") else _optional_int(label, "label_column", lineno)
            options = IngestOptions(
                label_column=label_col,
                has_header=(row.get("has_header") or "").strip().lower() in ("1", "true", "yes"),
                missing_token=(row.get("missing_token") or "?").strip() or "?",
                delimiter=row.get("delimiter") or ",",
            )
            entries.append(ManifestEntry(name, file, _optional_int(row.get("k"), "k", lineno), options))
    if not entries:
        raise ConfigurationError(f"manifest {path} lists no datasets")
    return entries


def grid_specs(base: ExperimentSpec) -> List[ExperimentSpec]:
    """The 13 specs of one dataset's grid, in report order."""
    specs = [replace(base, algorithm="kmodes")]
    for algorithm in EMBEDDED_ALGORITHMS:
        for kind in DistanceKind:
            specs.append(replace(base, algorithm=algorithm, distance=kind))
    return specs


class ExperimentReport:
    """Ordered collection of report cells with the per-dataset best marked."""

    def __init__(self, cells: Iterable[ReportCell] = ()):
        self.cells = list(cells)

    def __iter__(self):
        return iter(self.cells)

    def __len__(self):
        return len(self.cells)

    @property
    def failed(self) -> bool:
        return any(not c.ok for c in self.cells)

    def datasets(self) -> List[str]:
        return list(dict.fromkeys(c.dataset for c in self.cells))

    def cell(self, dataset, algorithm, distance="-") -> ReportCell:
        distance = str(distance)
        for c in self.cells:
            if (c.dataset, c.algorithm, c.distance) == (dataset, algorithm, distance):
                return c
        raise KeyError((dataset, algorithm, distance))

    def best(self) -> List[bool]:
        """For each cell, whether it has the best mean accuracy of its dataset."""
        top = {}
        for c in self.cells:
            if c.ok:
                top[c.dataset] = max(top.get(c.dataset, -1.0), c.mean_accuracy)
        return [c.ok and c.mean_accuracy >= top[c.dataset] - TIE_TOLERANCE for c in self.cells]

    def records(self, timing: bool = True) -> List[dict]:
        out = []
        for c, best in zip(self.cells, self.best()):
            out.append({
                "dataset": c.dataset,
                "algorithm": c.algorithm,
                "distance": c.distance,
                "mean_accuracy": c.mean_accuracy,
                "std_accuracy": c.std_accuracy,
                "restarts": c.restarts,
                "seed": c.seed,
                "seconds": c.seconds if timing else None,
                "best": best,
                "error": c.error,
            })
        return out

    def to_csv(self, timing: bool = True) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(REPORT_COLUMNS)
        for rec in self.records(timing):
            row = []
            for col in REPORT_COLUMNS:
                v = rec[col]
                if v is None:
                    v = ""
                elif isinstance(v, bool):
                    v = int(v)
                elif isinstance(v, float):
                    v = repr(v)
                row.append(v)
            writer.writerow(row)
        return buf.getvalue()

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.records(timing), indent=2) + "\n"


def _failed_cells(name, specs, message):
    return [
        ReportCell(name, s.algorithm, s.distance_label, float("nan"), float("nan"),
                   s.restarts, int(s.master_seed), 0.0, error=message)
        for s in specs
    ]


def run_benchmark(entries: Iterable[ManifestEntry], base: ExperimentSpec, progress=None) -> ExperimentReport:
    """Run the full grid on every manifest entry.

    Each dataset's embeddings are built once and shared by the three
    embedded clusterers. A dataset that fails to load or cluster yields
    cells carrying the error message instead of aborting the run.
    """
    cells = []
    for entry in entries:
        specs = grid_specs(replace(base, k=entry.k))
        try:
            ds = load_dataset(entry.path, entry.options)
        except Exception as exc:  # recorded in the report
            cells.extend(_failed_cells(entry.name, specs, f"{type(exc).__name__}: {exc}"))
            continue
        embeddings = {}
        for spec in specs:
            try:
                emb = None
                if spec.algorithm != "kmodes":
                    if spec.distance not in embeddings:
                        embeddings[spec.distance] = build_embedding(ds, spec.distance)
                    emb = embeddings[spec.distance]
                cell = run_experiment(ds, spec, entry.name, embedding=emb)
            except Exception as exc:
                cell = _failed_cells(entry.name, [spec], f"{type(exc).__name__}: {exc}")[0]
            cells.append(cell)
            if progress is not None:
                progress(cell)
    return ExperimentReport(cells)


def sbd_best_or_tied(report: ExperimentReport, algorithm: str) -> dict:
    """Per dataset, whether SBD matches the best of the four embeddings for ``algorithm``."""
    out = {}
    for name in report.datasets():
        means = {}
        for kind in DistanceKind:
            try:
                c = report.cell(name, algorithm, kind.value)
            except KeyError:
                continue
            if c.ok:
                means[kind] = c.mean_accuracy
        if DistanceKind.SBD in means:
            out[name] = means[DistanceKind.SBD] >= max(means.values()) - TIE_TOLERANCE
    return out
