"""Fixtures: synthetic schema-valid CSV trees and one real aqdsim run."""

import subprocess

import numpy as np
import pytest

SINGLE_COLUMNS = ("n_ph", "sz", "parity", "p_down0")
PAIR_COLUMNS = ("n_ph", "sz_1", "sz_2", "parity")


def write_schema_csv(path, times, columns, config="model.kind = qrm"):
    """Write a CSV exactly matching the simulator's output format."""
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(f"# config: {config}\n")
        handle.write(",".join(("time_s",) + tuple(columns)) + "\n")
        for row in zip(times, *columns.values()):
            handle.write(",".join(format(v, ".16e") for v in row) + "\n")


def _fake_columns(names, times, rng):
    return {
        name: np.cos(2 * np.pi * times / times[-1] + rng.uniform(0, 6))
        for name in names
    }


@pytest.fixture
def preset_dir(tmp_path):
    """Synthetic CSVs for every file any of the four figures consumes."""
    rng = np.random.default_rng(7)
    times = np.linspace(0.0, 0.06, 61)
    stems = [
        f"fig{fig}{panel}_{i}"
        for fig in ("2", "3")
        for panel in ("a", "b", "c")
        for i in (1, 2, 3)
    ]
    stems += [f"fig4_{i}" for i in (1, 2, 3)]
    for stem in stems:
        write_schema_csv(tmp_path / f"{stem}.csv", times,
                         _fake_columns(SINGLE_COLUMNS, times, rng))
    for stem in ("fig5a_full", "fig5a_effective",
                 "fig5b_full", "fig5b_effective"):
        write_schema_csv(tmp_path / f"{stem}.csv", times,
                         _fake_columns(PAIR_COLUMNS, times, rng))
    return tmp_path


@pytest.fixture(scope="session")
def real_fig4_dir(tmp_path_factory):
    """CSVs produced by the actual simulator CLI (external interface)."""
    out = tmp_path_factory.mktemp("fig4_csv")
    subprocess.run(
        ["aqdsim", "preset", "fig4", "--out", str(out)],
        check=True, capture_output=True, text=True,
    )
    return out
