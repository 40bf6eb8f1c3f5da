"""CSV and JSON writers: fixed format, full precision, reproducible bytes."""

import json

import numpy as np

from dbmtri.experiments import Check, Curve, ExperimentResult
from dbmtri.report import config_hash, write_csv, write_summary


def _result():
    t = np.array([0.0, 0.1])
    curves = [
        Curve(series="cov_a", t=t, value=np.array([2.0, 1.0 / 3.0]), se=np.array([0.01, 0.02])),
        Curve(series="theory", t=t, value=np.array([2.0, 0.5]), se=None),
    ]
    checks = [Check("gate", True, "fine"), Check("other", False, "off by 7")]
    return ExperimentResult(
        name="demo",
        config={"n": 10, "seed_dependent": False},
        curves=curves,
        checks=checks,
        metrics={"gap": 0.125},
    )


def test_config_hash_stable_and_order_free():
    h1 = config_hash({"a": 1, "b": [2, 3]})
    h2 = config_hash({"b": [2, 3], "a": 1})
    assert h1 == h2
    assert len(h1) == 12
    assert h1 != config_hash({"a": 1, "b": [2, 4]})


def test_csv_layout(tmp_path):
    path = tmp_path / "out.csv"
    write_csv(path, _result().curves, config={"n": 10}, seed=3)
    lines = path.read_text().splitlines()
    assert lines[0].startswith("# config=") and " seed=3 " in lines[0]
    assert lines[1] == "t,value,stderr,series"
    assert lines[2] == "0,2,0.01,cov_a"
    # full precision survives the round trip
    assert lines[3].split(",")[1] == "0.33333333333333331"
    # missing stderr stays an empty field
    assert lines[4] == "0,2,,theory"
    assert len(lines) == 6


def test_csv_bytes_reproducible(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    write_csv(a, _result().curves, config={"n": 10}, seed=3)
    write_csv(b, _result().curves, config={"n": 10}, seed=3)
    assert a.read_bytes() == b.read_bytes()


def test_summary_schema(tmp_path):
    path = tmp_path / "summary.json"
    res = _result()
    write_summary(path, res, seed=9, wall_time_s=1.25)
    doc = json.loads(path.read_text())
    assert doc["config"] == {"n": 10, "seed_dependent": False}
    assert doc["seed"] == 9
    assert doc["wall_time_s"] == 1.25
    assert isinstance(doc["git_version"], str) and doc["git_version"]
    assert doc["checks"] == [
        {"name": "gate", "pass": True, "detail": "fine"},
        {"name": "other", "pass": False, "detail": "off by 7"},
    ]
    assert doc["metrics"]["gap"] == 0.125
