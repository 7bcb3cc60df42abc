"""Reading delimited categorical tables into integer-coded datasets."""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass, field
from typing import Optional, Sequence, TextIO, Union

import numpy as np

from .errors import ConfigurationError, IngestionError

__all__ = ["CategoricalDataset", "IngestOptions", "load_dataset", "category_domain"]


@dataclass(frozen=True)
class IngestOptions:
    """How a delimited text table is turned into a dataset.

    ``label_column`` is a column position (negative positions count from the
    end) or ``None`` for unlabeled data. Empty cells are read as
    ``missing_token``; the missing token is then an ordinary category.
    """

    label_column: Optional[int] = -1
    has_header: bool = False
    missing_token: str = "?"
    delimiter: str = ","

    def __post_init__(self):
        if not isinstance(self.delimiter, str) or len(self.delimiter) != 1:
            raise ConfigurationError(f"delimiter must be a single character, got {self.delimiter!r}")
        if self.label_column is not None and not isinstance(self.label_column, (int, np.integer)):
            raise ConfigurationError(f"label_column must be an integer or None, got {self.label_column!r}")


@dataclass(frozen=True, eq=False)
class CategoricalDataset:
    """N objects described by M categorical attributes.

    Attributes
    ----------
    cells : ndarray of int, shape (N, M)
        Category code of every (object, attribute) cell.
    category_tables : tuple of tuple of str
        ``category_tables[m][code]`` is the original string behind ``code``
        in column ``m``; codes follow first appearance order.
    labels : ndarray of int, shape (N,), or None
        Ground-truth class codes. Only the evaluation code reads these.
    class_names : tuple of str
        ``class_names[code]`` is the original class string.
    attribute_names : tuple of str
        Header names when the source had a header, else ``a0, a1, ...``.
    """

    cells: np.ndarray
    category_tables: tuple
    labels: Optional[np.ndarray] = None
    class_names: tuple = ()
    attribute_names: tuple = field(default=())

    def __post_init__(self):
        cells = np.array(self.cells, dtype=np.int64)
        if cells.ndim != 2 or cells.shape[0] < 1 or cells.shape[1] < 1:
            raise IngestionError(f"dataset needs at least one object and one attribute, got shape {cells.shape}")
        tables = tuple(tuple(t) for t in self.category_tables)
        if len(tables) != cells.shape[1]:
            raise IngestionError("one category table per attribute is required")
        for m, table in enumerate(tables):
            col = cells[:, m]
            if col.min() < 0 or col.max() >= len(table):
                raise IngestionError(f"attribute {m} has a code outside its category table")
            if len(np.unique(col)) != len(table):
                raise IngestionError(f"attribute {m} lists categories that never occur")
        cells.setflags(write=False)
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "category_tables", tables)

        if self.labels is not None:
            labels = np.array(self.labels, dtype=np.int64)
            if labels.shape != (cells.shape[0],):
                raise IngestionError(f"expected {cells.shape[0]} labels, got shape {labels.shape}")
            if labels.min() < 0 or labels.max() >= len(self.class_names):
                raise IngestionError("label code outside class_names")
            labels.setflags(write=False)
            object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "class_names", tuple(self.class_names))

        names = tuple(self.attribute_names) or tuple(f"a{m}" for m in range(cells.shape[1]))
        if len(names) != cells.shape[1]:
            raise IngestionError("one attribute name per attribute is required")
        object.__setattr__(self, "attribute_names", names)

    @property
    def n_objects(self) -> int:
        return self.cells.shape[0]

    @property
    def n_attributes(self) -> int:
        return self.cells.shape[1]

    @property
    def n_classes(self) -> int:
        return len(self.class_names)

    def decode(self) -> list:
        """Return the cells as a list of rows of original strings."""
        return [
            [self.category_tables[m][code] for m, code in enumerate(row)]
            for row in self.cells.tolist()
        ]

    def __len__(self):
        return self.n_objects

    def __repr__(self):
        lab = "unlabeled" if self.labels is None else f"{self.n_classes} classes"
        return f"CategoricalDataset(N={self.n_objects}, M={self.n_attributes}, {lab})"


def _encode(column: Sequence[str]):
    table: dict = {}
    codes = [table.setdefault(value, len(table)) for value in column]
    return codes, tuple(table)


def _open_source(source):
    if isinstance(source, (str, os.PathLike)):
        with open(source, newline="") as fh:
            return fh.read()
    return source.read()


def load_dataset(
    source: Union[str, os.PathLike, TextIO], options: Optional[IngestOptions] = None
) -> CategoricalDataset:
    """Parse a delimited text table into a :class:`CategoricalDataset`.

    Parameters
    ----------
    source : path or text stream
        One object per line, fields separated by ``options.delimiter``.
    options : IngestOptions, optional
        Defaults to a comma-separated file without header whose last column
        holds the class label.

    Distinct strings in each column get integer codes in order of first
    appearance. Fields are compared case-sensitively after stripping
    surrounding whitespace.
    """
    options = options or IngestOptions()
    text = _open_source(source)
    reader = csv.reader(io.StringIO(text), delimiter=options.delimiter)
    rows = []
    for lineno, row in enumerate(reader, start=1):
        if not row or all(not c.strip() for c in row):
            continue
        rows.append((lineno, [c.strip() or options.missing_token for c in row]))
    header = None
    if options.has_header and rows:
        header = rows.pop(0)[1]
    if not rows:
        raise IngestionError("input contains no data rows")

    width = len(rows[0][1])
    for lineno, row in rows:
        if len(row) != width:
            raise IngestionError(f"line {lineno}: expected {width} fields, found {len(row)}")

    label_col = options.label_column
    if label_col is not None:
        if not -width <= label_col < width:
            raise ConfigurationError(f"label_column {label_col} out of range for {width} columns")
        label_col %= width
    attr_cols = [j for j in range(width) if j != label_col]
    if not attr_cols:
        raise IngestionError("no attribute columns left after removing the label column")

    data = [row for _, row in rows]
    codes, tables = [], []
    for j in attr_cols:
        c, t = _encode([row[j] for row in data])
        codes.append(c)
        tables.append(t)
    cells = np.array(codes, dtype=np.int64).T

    labels, class_names = None, ()
    if label_col is not None:
        labels, class_names = _encode([row[label_col] for row in data])

    names = tuple(header[j] for j in attr_cols) if header is not None else ()
    return CategoricalDataset(cells, tuple(tables), labels, class_names, names)


def category_domain(ds: CategoricalDataset, attribute: int) -> tuple:
    """Ordered category strings of one attribute (its value domain)."""
    if not 0 <= attribute < ds.n_attributes:
        raise IndexError(f"attribute {attribute} out of range for {ds.n_attributes} attributes")
    return ds.category_tables[attribute]
