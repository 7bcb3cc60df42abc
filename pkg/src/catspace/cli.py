"""Command-line interface: ``catspace {cluster,matrix,benchmark}``.

Exit status is 0 on success, 1 when a computation fails and 2 for usage,
validation and input-file errors.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager

import numpy as np

from .benchmark import load_manifest, run_benchmark
from .clustering import LINKAGES
from .dataset import IngestOptions, load_dataset
from .errors import CatspaceError, ConfigurationError, IngestionError
from .evaluation import ALGORITHMS, ExperimentSpec, accuracy, build_embedding, fit, restart_seed
from .space import DistanceKind, build_distance, build_similarity

DISTANCES = [k.value for k in DistanceKind]


class UsageError(Exception):
    pass


def _label_col(text):
    if text.lower() == "none":
        return None
    if text.lower() == "last":
        return -1
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, 'last' or 'none', got {text!r}") from None


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _seed(text):
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("must fit in 64 unsigned bits")
    return value


def _add_ingest(p):
    g = p.add_argument_group("input")
    g.add_argument("input", help="delimited categorical data file")
    g.add_argument("--label-col", type=_label_col, default=-1, metavar="COL",
                   help="label column position, 'last' or 'none' (default: last)")
    g.add_argument("--header", action="store_true", help="first line is a header (default: off)")
    g.add_argument("--missing-token", default="?", help="token for missing values (default: %(default)s)")
    g.add_argument("--delimiter", default=",", help="field delimiter (default: %(default)r)")


def _add_fit(p, restarts_default):
    g = p.add_argument_group("clustering")
    g.add_argument("--seed", type=_seed, default=0, help="master seed (default: %(default)s)")
    g.add_argument("--restarts", type=_positive_int, default=restarts_default,
                   help="seeded restarts to average (default: %(default)s)")
    g.add_argument("--linkage", choices=LINKAGES, default="average",
                   help="hierarchical linkage (default: %(default)s)")
    g.add_argument("--max-iter", type=_positive_int, default=300, help="iteration cap (default: %(default)s)")
    g.add_argument("--tol", type=float, default=1e-6, help="FCM convergence tolerance (default: %(default)s)")
    g.add_argument("--fuzzifier", type=float, default=2.0, help="FCM fuzzifier m > 1 (default: %(default)s)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="catspace", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cluster", help="cluster one dataset and list assignments")
    _add_ingest(p)
    p.add_argument("--algorithm", choices=ALGORITHMS, default="kmeans", help="clusterer (default: %(default)s)")
    p.add_argument("--distance", choices=DISTANCES, default=None,
                   help="embedding distance; not allowed with kmodes (default: sbd)")
    p.add_argument("--k", type=int, default=None, help="number of clusters (default: number of classes)")
    p.add_argument("--score", action="store_true", help="append the accuracy against the labels (default: off)")
    p.add_argument("--output", "-o", default="-", help="output path or '-' for stdout (default: -)")
    _add_fit(p, restarts_default=1)

    p = sub.add_parser("matrix", help="dump the similarity or distance matrix")
    _add_ingest(p)
    p.add_argument("--kind", choices=("similarity", "distance"), required=True, help="matrix to write (required)")
    p.add_argument("--distance", choices=DISTANCES, default=None, help="distance for --kind distance (required then)")
    p.add_argument("--output", "-o", default="-", help="output path or '-' for stdout (default: -)")

    p = sub.add_parser("benchmark", help="run every clusterer/distance pair on a manifest of datasets")
    p.add_argument("manifest", help="CSV manifest with columns name,path,k,label_column")
    p.add_argument("--output", "-o", default="-", help="CSV report path or '-' for stdout (default: -)")
    p.add_argument("--json", default=None, metavar="PATH", help="also write the report as JSON (default: off)")
    p.add_argument("--timing", action="store_true",
                   help="fill the seconds column; reports then differ between runs (default: off)")
    p.add_argument("--quiet", action="store_true", help="no per-cell progress on stderr (default: off)")
    _add_fit(p, restarts_default=100)
    return parser


def _ingest(args) -> IngestOptions:
    try:
        return IngestOptions(args.label_col, args.header, args.missing_token, args.delimiter)
    except ConfigurationError as exc:
        raise UsageError(str(exc)) from None


def _load(args):
    try:
        return load_dataset(args.input, _ingest(args))
    except (OSError, IngestionError, ConfigurationError) as exc:
        raise UsageError(f"{args.input}: {exc}") from None


@contextmanager
def _sink(path):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _spec(args, algorithm, distance, k):
    try:
        return ExperimentSpec(
            algorithm, distance or DistanceKind.SBD, restarts=args.restarts, master_seed=args.seed, k=k,
            max_iterations=args.max_iter, tolerance=args.tol, fuzzifier=args.fuzzifier, linkage=args.linkage,
        )
    except ConfigurationError as exc:
        raise UsageError(str(exc)) from None


def cmd_cluster(args) -> int:
    if args.algorithm == "kmodes" and args.distance is not None:
        raise UsageError("--distance does not apply to --algorithm kmodes")
    if args.k is not None and args.k < 1:
        raise UsageError(f"--k must be >= 1, got {args.k}")
    if args.score and args.label_col is None:
        raise UsageError("--score needs labels; drop --label-col none")
    ds = _load(args)
    k = args.k if args.k is not None else (ds.n_classes if ds.labels is not None else None)
    if k is None:
        raise UsageError("--k is required for unlabeled data")
    if k > ds.n_objects:
        raise UsageError(f"--k {k} exceeds the number of objects ({ds.n_objects})")
    spec = _spec(args, args.algorithm, args.distance, k)

    data = ds if spec.algorithm == "kmodes" else build_embedding(ds, spec.distance)
    scores, first = [], None
    for r in range(spec.restarts):
        result = fit(spec.algorithm, data, spec.config(k, restart_seed(spec.master_seed, r)))
        if first is None:
            first = result
        if args.score:
            scores.append(accuracy(result, ds.labels))

    with _sink(args.output) as out:
        for i, label in enumerate(first.labels.tolist()):
            out.write(f"{i},{label}\n")
        if args.score:
            out.write(f"accuracy,{float(np.mean(scores))!r}\n")
            if spec.restarts > 1:
                out.write(f"accuracy_std,{float(np.std(scores))!r}\n")
    return 0


def cmd_matrix(args) -> int:
    if args.kind == "distance" and args.distance is None:
        raise UsageError("--kind distance requires --distance")
    if args.kind == "similarity" and args.distance is not None:
        raise UsageError("--distance only applies to --kind distance")
    ds = _load(args)
    S = build_similarity(ds)
    with _sink(args.output) as out:
        if args.kind == "similarity":
            for row in S.entries.tolist():
                out.write(",".join(str(v) for v in row) + "\n")
        else:
            D = build_distance(S, args.distance)
            for row in D.entries.tolist():
                out.write(",".join(repr(v) for v in row) + "\n")
    return 0


def cmd_benchmark(args) -> int:
    try:
        entries = load_manifest(args.manifest)
    except (OSError, ConfigurationError) as exc:
        raise UsageError(str(exc)) from None
    base = _spec(args, "kmeans", None, None)

    def progress(cell):
        if not args.quiet:
            status = f"{cell.mean_accuracy:.4f} +/- {cell.std_accuracy:.4f}" if cell.ok else f"FAILED {cell.error}"
            print(f"{cell.dataset:<18} {cell.algorithm:<13} {cell.distance:<10} {status}", file=sys.stderr)

    report = run_benchmark(entries, base, progress=progress)
    with _sink(args.output) as out:
        out.write(report.to_csv(timing=args.timing))
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.to_json(timing=args.timing))
    return 1 if report.failed else 0


COMMANDS = {"cluster": cmd_cluster, "matrix": cmd_matrix, "benchmark": cmd_benchmark}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"catspace {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (CatspaceError, RuntimeError, ValueError) as exc:
        print(f"catspace {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
