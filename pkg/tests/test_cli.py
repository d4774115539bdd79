import json
import subprocess
import sys

import pytest

from homsim import cli


def write(tmp_path, cfg, name="cfg.json"):
    path = tmp_path / name
    path.write_text(cfg if isinstance(cfg, str) else json.dumps(cfg))
    return str(path)


THREE_PHOTON = {
    "T": 2 / 3,
    "port_a": [{"tau": 0.0}, {"tau": 0.0}],
    "port_b": [{"tau": 0.0}],
    "scan": {"port": "b", "from": -6.0, "to": 6.0, "steps": 241, "pattern": [2, 1]},
}


def test_dist_three_photon_null(tmp_path, capsys):
    assert cli.main(["dist", "--config", write(tmp_path, THREE_PHOTON)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert "2,1,0.000000000000" in lines
    assert lines[-1] == "sum,1.000000000000"


def test_dist_hom(tmp_path, capsys):
    cfg = {"T": 0.5, "port_a": [{"tau": 0}], "port_b": [{"tau": 0}]}
    assert cli.main(["dist", "--config", write(tmp_path, cfg)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert "2,0,0.500000000000" in lines
    assert "1,1,0.000000000000" in lines
    assert "0,2,0.500000000000" in lines


def test_dist_hwp_config(tmp_path, capsys):
    cfg = {"hwp_deg": 22.5, "port_a": [{"tau": 0}], "port_b": [{"tau": 0}]}
    assert cli.main(["dist", "--config", write(tmp_path, cfg)]) == 0
    assert "1,1,0.000000000000" in capsys.readouterr().out.splitlines()


@pytest.mark.parametrize("cfg,field", [
    ("{not json", "malformed"),
    ({"port_a": [{"tau": 0}]}, "'T'"),
    ({"T": 0.5, "hwp_deg": 10, "port_a": [{"tau": 0}]}, "'T'"),
    ({"T": 1.5, "port_a": [{"tau": 0}]}, "'T'"),
    ({"hwp_deg": 45, "port_a": [{"tau": 0}]}, "'hwp_deg'"),
    ({"T": 0.5, "port_a": [{"sigma": 1}]}, "port_a[0].tau"),
    ({"T": 0.5, "port_a": [{"tau": 0, "sigma": -1}]}, "port_a[0].sigma"),
    ({"T": 0.5, "port_b": [{"tau": 0, "tag": 1.5}]}, "port_b[0].tag"),
    ({"T": 0.5, "port_a": [{"tau": "x"}]}, "port_a[0].tau"),
])
def test_dist_parse_errors(tmp_path, capsys, cfg, field):
    assert cli.main(["dist", "--config", write(tmp_path, cfg)]) == 2
    assert field in capsys.readouterr().err


def test_missing_file(tmp_path):
    assert cli.main(["dist", "--config", str(tmp_path / "nope.json")]) == 2


def test_dist_cap(tmp_path):
    cfg = {"T": 0.5, "port_a": [{"tau": 0}] * 5, "port_b": [{"tau": 0}] * 4}
    assert cli.main(["dist", "--config", write(tmp_path, cfg)]) == 3


def read_csv(path):
    text = path.read_text()
    assert "\r" not in text
    rows = text.splitlines()
    return rows[0], [tuple(float(x) for x in r.split(",")) for r in rows[1:]]


def test_scan_single_dip(tmp_path, capsys):
    out = tmp_path / "scan.csv"
    assert cli.main(["scan", "--config", write(tmp_path, THREE_PHOTON), "--out", str(out)]) == 0
    header, rows = read_csv(out)
    assert header == "delay,probability"
    assert len(rows) == 241
    stdout = capsys.readouterr().out.strip()
    vis = float(stdout.split("visibility=")[1])
    assert vis == pytest.approx(1.0, abs=1e-9)
    assert stdout.startswith("baseline=0.444444444444")


def test_scan_double_dip(tmp_path, capsys):
    cfg = dict(THREE_PHOTON, port_a=[{"tau": -2.5}, {"tau": 2.5}])
    out = tmp_path / "scan.csv"
    assert cli.main(["scan", "--config", write(tmp_path, cfg), "--out", str(out)]) == 0
    vis = float(capsys.readouterr().out.split("visibility=")[1])
    assert vis == pytest.approx(0.5, abs=0.02)
    _, rows = read_csv(out)
    probs = [p for _, p in rows]
    minima = [rows[i][0] for i in range(1, len(rows) - 1) if probs[i] < probs[i - 1] and probs[i] < probs[i + 1]]
    assert minima == [pytest.approx(-2.5, abs=0.051), pytest.approx(2.5, abs=0.051)]


def test_scan_orthogonal(tmp_path, capsys):
    cfg = dict(THREE_PHOTON, port_a=[{"tau": 0, "tag": 1}, {"tau": 0, "tag": 2}])
    assert cli.main(["scan", "--config", write(tmp_path, cfg), "--out", str(tmp_path / "o.csv")]) == 0
    assert capsys.readouterr().out.strip().endswith("visibility=0.000000000000")


def test_scan_without_scan_block(tmp_path):
    cfg = {k: v for k, v in THREE_PHOTON.items() if k != "scan"}
    assert cli.main(["scan", "--config", write(tmp_path, cfg), "--out", str(tmp_path / "x.csv")]) == 2


@pytest.mark.parametrize("scan,field", [
    ({"port": "b", "from": -1, "to": 1, "steps": 1}, "scan.steps"),
    ({"port": "z", "from": -1, "to": 1, "steps": 5}, "scan.port"),
    ({"port": "b", "from": 1, "to": -1, "steps": 5}, "scan.to"),
    ({"port": "b", "from": -1, "to": 1, "steps": 5, "pattern": [1, 1]}, "scan.pattern"),
])
def test_scan_block_errors(tmp_path, capsys, scan, field):
    cfg = dict(THREE_PHOTON, scan=scan)
    assert cli.main(["scan", "--config", write(tmp_path, cfg), "--out", str(tmp_path / "x.csv")]) == 2
    assert field in capsys.readouterr().err


def test_scan_zero_baseline_exit(tmp_path, monkeypatch):
    def boom(spec):
        raise cli.ZeroBaselineError()
    monkeypatch.setattr(cli, "delay_scan", boom)
    assert cli.main(["scan", "--config", write(tmp_path, THREE_PHOTON), "--out", str(tmp_path / "x.csv")]) == 4


def test_scan_byte_identical_reruns(tmp_path, capsys):
    cfg = write(tmp_path, dict(THREE_PHOTON, port_a=[{"tau": -2.5}, {"tau": 2.5, "sigma": 1.3}]))
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    cli.main(["scan", "--config", cfg, "--out", str(a)])
    out_a = capsys.readouterr().out
    cli.main(["scan", "--config", cfg, "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()
    assert capsys.readouterr().out == out_a


@pytest.mark.parametrize("m,n,expected", [
    (2, 1, ["0.666666666667"]),
    (1, 1, ["0.500000000000"]),
    (2, 2, ["0.211324865405", "0.788675134595"]),
    (1, 0, ["none"]),
])
def test_null_t(capsys, m, n, expected):
    assert cli.main(["null-t", "--m", str(m), "--n", str(n)]) == 0
    assert capsys.readouterr().out.splitlines() == expected


def test_null_t_cap():
    assert cli.main(["null-t", "--m", "5", "--n", "4"]) == 3


def test_oracle_check(capsys):
    assert cli.main(["oracle-check", "--max-photons", "4", "--trials", "100", "--seed", "42"]) == 0
    out = capsys.readouterr().out
    assert float(out.split("max_tvd=")[1]) < 1e-10
    assert cli.main(["oracle-check", "--max-photons", "6", "--trials", "10", "--seed", "7"]) == 0
    assert cli.main(["oracle-check", "--max-photons", "9", "--trials", "1", "--seed", "0"]) == 3


def test_oracle_check_deterministic(capsys):
    cli.main(["oracle-check", "--max-photons", "5", "--trials", "5", "--seed", "3"])
    first = capsys.readouterr().out
    cli.main(["oracle-check", "--max-photons", "5", "--trials", "5", "--seed", "3"])
    assert capsys.readouterr().out == first


def test_oracle_check_reports_failure(capsys, monkeypatch):
    monkeypatch.setattr(cli, "ORACLE_TVD_LIMIT", -1.0)
    assert cli.main(["oracle-check", "--max-photons", "3", "--trials", "2", "--seed", "1"]) == 1
    out = capsys.readouterr().out.splitlines()
    failing = json.loads(out[-1])
    assert {"T", "port_a", "port_b"} <= set(failing)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "homsim", "null-t", "--m", "3", "--n", "1"],
                         capture_output=True, text=True, check=True)
    assert res.stdout == "0.750000000000\n"
