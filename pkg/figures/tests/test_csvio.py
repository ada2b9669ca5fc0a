import numpy as np
import pytest
from conftest import write_schema_csv

from aqdfigs.csvio import read_series
from aqdfigs.errors import MissingInputError


def test_round_trip_is_exact(tmp_path):
    times = np.linspace(0.0, 1.0, 11)
    values = np.exp(-3.0 * times) * np.cos(17.0 * times)
    path = tmp_path / "run.csv"
    write_schema_csv(path, times, {"sz": values}, config="output.label = run")
    series = read_series(path)
    assert series.config == "output.label = run"
    np.testing.assert_array_equal(series.times, times)
    np.testing.assert_array_equal(series.column("sz"), values)


def test_missing_file_is_named(tmp_path):
    with pytest.raises(MissingInputError, match="nope.csv"):
        read_series(tmp_path / "nope.csv")


def test_missing_column_is_named(tmp_path):
    path = tmp_path / "run.csv"
    write_schema_csv(path, np.array([0.0, 1.0]), {"sz": np.array([1.0, 0.5])})
    series = read_series(path)
    with pytest.raises(MissingInputError, match="n_ph"):
        series.column("n_ph")


def test_rejects_missing_config_line(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("time_s,sz\n0.0,1.0\n")
    with pytest.raises(MissingInputError, match="config"):
        read_series(path)


def test_rejects_wrong_leading_header(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("# config: x = 1\nsz,time_s\n1.0,0.0\n")
    with pytest.raises(MissingInputError, match="time_s"):
        read_series(path)
