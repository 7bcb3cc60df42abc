"""Convert the UCI datasets bundled with Orange 2.7.8 into plain CSV files.

Usage::

    python tools/prepare_datasets.py /path/to/Orange-2.7.8/Orange/datasets data/

Orange ``.tab`` files carry three header lines (names, types, flags).  Columns
flagged ``i`` (ignore) or typed ``string`` are dropped, the ``class`` column is
moved to the end, and empty cells are written as ``?``.  The output has no
header line, so every file loads with the default ingest options.

The balloon file is generated from its documented rule instead (see
``balloon_rows``), because it is not part of the Orange distribution.
"""

import csv
import itertools
import sys
from pathlib import Path

# output name -> Orange source file
SOURCES = {
    "lenses": "lenses.tab",
    "breast-cancer-wisconsin": "breast-cancer-wisconsin.tab",
    "hayes-roth": "hayes-roth_learn.tab",
    "promoters": "promoters.tab",
    "monks-1": "monks-1_test.tab",
    "voting": "voting.tab",
    "balance-scale": "balance-scale.tab",
}


def read_orange_tab(path):
    lines = Path(path).read_text().splitlines()
    names = lines[0].split("\t")
    types = lines[1].split("\t")
    flags = lines[2].split("\t")
    n = len(names)
    types += [""] * (n - len(types))
    flags += [""] * (n - len(flags))

    keep, label = [], None
    for j in range(n):
        flag = flags[j].strip()
        if flag == "class":
            label = j
        elif flag in ("i", "ignore", "meta", "m") or types[j].strip() == "string":
            continue
        else:
            keep.append(j)

    rows = []
    for line in lines[3:]:
        if not line.strip():
            continue
        cells = line.split("\t")
        cells += [""] * (n - len(cells))
        cells = [c.strip() or "?" for c in cells]
        rows.append([cells[j] for j in keep] + [cells[label]])
    return rows


def balloon_rows():
    """All 16 objects of the 'yellow-small+adult-stretch' balloon set.

    Inflated is T iff (color=YELLOW and size=SMALL) or (age=ADULT and
    act=STRETCH); the set is the full factorial over the four attributes.
    """
    rows = []
    for color, size, act, age in itertools.product(
        ("YELLOW", "PURPLE"), ("SMALL", "LARGE"), ("STRETCH", "DIP"), ("ADULT", "CHILD")
    ):
        inflated = (color == "YELLOW" and size == "SMALL") or (age == "ADULT" and act == "STRETCH")
        rows.append([color, size, act, age, "T" if inflated else "F"])
    return rows


def write_csv(rows, path):
    with open(path, "w", newline="") as fh:
        csv.writer(fh, lineterminator="\n").writerows(rows)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    if len(argv) != 2:
        raise SystemExit(__doc__)
    src, dst = Path(argv[0]), Path(argv[1])
    dst.mkdir(parents=True, exist_ok=True)
    for name, fname in SOURCES.items():
        rows = read_orange_tab(src / fname)
        write_csv(rows, dst / f"{name}.csv")
        print(f"{name}: {len(rows)} rows x {len(rows[0]) - 1} attributes")
    rows = balloon_rows()
    write_csv(rows, dst / "balloon.csv")
    print(f"balloon: {len(rows)} rows x {len(rows[0]) - 1} attributes")


if __name__ == "__main__":
    main()
