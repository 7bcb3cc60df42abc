import io
from pathlib import Path

import pytest

from catspace import IngestOptions, load_dataset

DATA_DIR = Path(__file__).resolve().parents[1] / "data"

# pressure, volume, temperature of four objects
PVT = "High,Medium,High\nLow,Low,High\nHigh,High,Low\nMedium,Low,High\n"

# hand-counted attribute matches between the four objects above
PVT_SIMILARITY = [
    [3, 1, 1, 1],
    [1, 3, 0, 2],
    [1, 0, 3, 0],
    [1, 2, 0, 3],
]


@pytest.fixture
def pvt():
    return load_dataset(io.StringIO(PVT), IngestOptions(label_column=None))


@pytest.fixture
def pvt_file(tmp_path):
    path = tmp_path / "pvt.csv"
    path.write_text(PVT)
    return path


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
