"""Reader for the simulator's CSV output.

The schema: UTF-8, LF endings, first line ``# config: <echo>``, second line
comma-separated headers starting with ``time_s``, then one row per sample in
scientific notation.  Values round-trip exactly (17 significant digits).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import MissingInputError


@dataclass(frozen=True)
class Series:
    path: Path
    config: str
    times: np.ndarray
    columns: dict[str, np.ndarray]

    def column(self, name: str) -> np.ndarray:
        if name not in self.columns:
            raise MissingInputError(
                f"{self.path} has no column {name!r} "
                f"(found: {', '.join(self.columns)})"
            )
        return self.columns[name]


def read_series(path: Path) -> Series:
    """Parse one simulator CSV; raises MissingInputError on schema problems."""
    if not path.is_file():
        raise MissingInputError(f"missing input file {path}")
    with open(path, encoding="utf-8", newline="") as handle:
        config_line = handle.readline()
        header_line = handle.readline()
        if not config_line.startswith("# config: "):
            raise MissingInputError(
                f"{path}: first line is not a '# config:' echo"
            )
        headers = header_line.strip().split(",")
        if headers[:1] != ["time_s"]:
            raise MissingInputError(
                f"{path}: header must start with time_s, got {header_line!r}"
            )
        data = np.loadtxt(handle, delimiter=",", ndmin=2)
    if data.shape[0] == 0 or data.shape[1] != len(headers):
        raise MissingInputError(
            f"{path}: expected {len(headers)} columns of data, "
            f"got shape {data.shape}"
        )
    columns = {name: data[:, i] for i, name in enumerate(headers[1:], start=1)}
    return Series(path, config_line[len("# config: "):].strip(),
                  data[:, 0], columns)
