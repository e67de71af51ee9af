"""Command-line surface: formats, determinism, exit codes."""

import json
import math
import subprocess
import sys

import pytest

from sigmak.cli import main

RUN = [sys.executable, "-m", "sigmak.cli"]


def _read(path):
    return path.read_bytes()


def test_pansu_rows(capsys, tmp_path):
    assert main(["pansu", "--lambda", "1", "--samples", "3"]) == 0
    out = capsys.readouterr().out
    lines = out.strip().splitlines()
    assert lines[0] == "z,f"
    rows = [tuple(map(float, ln.split(","))) for ln in lines[1:]]
    assert rows[0] == (0.0, pytest.approx(math.pi / 4.0, rel=1e-15))
    assert rows[1][0] == 0.5
    assert rows[2] == (1.0, 0.0)


def test_pansu_to_file(tmp_path, capsys):
    path = tmp_path / "pansu.csv"
    assert main(["pansu", "--lambda", "2", "--samples", "5",
                 "--out", str(path)]) == 0
    text = path.read_text()
    assert text.endswith("\n") and "\r" not in text
    lines = text.strip().splitlines()
    assert lines[0] == "z,f"
    assert len(lines) == 6
    z_last = float(lines[-1].split(",")[0])
    assert z_last == pytest.approx(0.5, rel=1e-15)


def test_classify_json_periodic(capsys):
    assert main(["classify", "--n", "2", "--i", "1", "--c", "4",
                 "--alpha0", "0", "--k0", "3"]) == 0
    out = capsys.readouterr().out.strip()
    assert out.startswith('{"class": "Periodic", "period": ')
    payload = json.loads(out)
    assert list(payload) == ["class", "period", "k_min", "k_max"]
    assert payload["period"] > 0
    assert payload["k_max"] == pytest.approx(3.0)


def test_classify_json_variants(capsys):
    main(["classify", "--n", "2", "--i", "3", "--c", "1",
          "--alpha0", "0", "--k0", "0.5"])
    arc = json.loads(capsys.readouterr().out)
    assert arc["class"] == "ArcToAlphaAxis"
    assert list(arc) == ["class", "s_minus", "s_plus", "alpha_end"]
    main(["classify", "--n", "2", "--i", "3", "--c", "1",
          "--alpha0", "1", "--k0", "-0.5"])
    bi = json.loads(capsys.readouterr().out)
    assert bi["class"] == "ArcBiInfinite"
    main(["classify", "--n", "2", "--i", "2", "--c", "0",
          "--alpha0", "0", "--k0", "1"])
    homo = json.loads(capsys.readouterr().out)
    assert homo == {"class": "HomoclinicToOrigin"}
    main(["classify", "--n", "2", "--i", "1", "--c", "4",
          "--alpha0", "0.3", "--k0", "1"])
    line = json.loads(capsys.readouterr().out)
    assert line == {"class": "ConstantKLine", "k": 1.0}


def test_orbit_csv_roundtrip(tmp_path, capsys):
    path = tmp_path / "trace.csv"
    assert main(["orbit", "--n", "2", "--i", "1", "--c", "4",
                 "--alpha0", "0", "--k0", "2", "--direction", "forward",
                 "--s-max", "1.0", "--out", str(path)]) == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "s,alpha,k"
    from sigmak import IntegratorConfig, PhasePoint, SigmaParams, integrate
    tr = integrate(SigmaParams(2, 1, 4.0), PhasePoint(0.0, 2.0),
                   IntegratorConfig(s_max=1.0), "forward")
    assert len(lines) - 1 == len(tr.samples)
    for ln, (s, a, k) in zip(lines[1:], tr.samples):
        fs, fa, fk = (float(x) for x in ln.split(","))
        assert (fs, fa, fk) == (s, a, k)  # 17 significant digits round-trip


def test_orbit_both_directions(tmp_path, capsys):
    path = tmp_path / "trace.csv"
    assert main(["orbit", "--n", "2", "--i", "1", "--c", "4",
                 "--alpha0", "0.5", "--k0", "2", "--s-max", "0.5",
                 "--out", str(path)]) == 0
    ss = [float(ln.split(",")[0]) for ln in path.read_text().splitlines()[1:]]
    assert ss[0] < 0.0 < ss[-1]
    assert all(b > a for a, b in zip(ss, ss[1:]))


def test_reconstruct_csv_and_obj(tmp_path, capsys):
    csv_path = tmp_path / "prof.csv"
    obj_path = tmp_path / "mesh.obj"
    assert main(["reconstruct", "--n", "2", "--i", "1", "--c", "4",
                 "--alpha0", "0", "--k0", "1", "--out", str(csv_path),
                 "--mesh", str(obj_path), "--segments", "8"]) == 0
    summary = json.loads(capsys.readouterr().out)
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "s,r,t,alpha,k"
    assert len(lines) - 1 == summary["samples"]
    obj_lines = obj_path.read_text().splitlines()
    v_lines = [ln for ln in obj_lines if ln.startswith("v ")]
    f_lines = [ln for ln in obj_lines if ln.startswith("f ")]
    assert len(v_lines) == summary["vertices"]
    assert len(f_lines) == summary["faces"]
    assert obj_lines[:len(v_lines)] == v_lines  # all v before all f
    for ln in f_lines:
        idx = [int(tok) for tok in ln.split()[1:]]
        assert len(idx) == 3
        assert all(1 <= j <= len(v_lines) for j in idx)  # 1-based


def test_portrait_outputs_and_determinism(tmp_path, capsys):
    svg1 = tmp_path / "p1.svg"
    svg2 = tmp_path / "p2.svg"
    csv1 = tmp_path / "p1.csv"
    csv2 = tmp_path / "p2.csv"
    args = ["portrait", "--n", "2", "--i", "3", "--c", "1", "--grid", "4"]
    assert main(args + ["--out", str(svg1), "--csv", str(csv1)]) == 0
    sum1 = json.loads(capsys.readouterr().out)
    assert main(args + ["--out", str(svg2), "--csv", str(csv2)]) == 0
    sum2 = json.loads(capsys.readouterr().out)
    assert _read(svg1) == _read(svg2)
    assert _read(csv1) == _read(csv2)
    assert sum1["class_counts"] == sum2["class_counts"]
    text = svg1.read_text()
    assert text.startswith('<svg xmlns="http://www.w3.org/2000/svg" '
                           'width="800" height="800" viewBox="0 0 800 800">')
    assert text.rstrip().endswith("</svg>")


def test_portrait_excluded_seeds_listed(tmp_path, capsys):
    svg = tmp_path / "p.svg"
    csv = tmp_path / "p.csv"
    # odd grid puts a seed row exactly on the singular axis k = 0
    assert main(["portrait", "--n", "2", "--i", "3", "--c", "1",
                 "--grid", "3", "--out", str(svg), "--csv", str(csv)]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["excluded"] == 3
    header = [ln for ln in csv.read_text().splitlines() if ln.startswith("#")]
    assert any("excluded_seeds" in ln and "k-axis singular locus" in ln
               for ln in header)


def test_exit_codes():
    usage = subprocess.run(RUN + ["classify", "--n", "2"],
                           capture_output=True, text=True)
    assert usage.returncode == 2
    numeric = subprocess.run(
        RUN + ["classify", "--n", "2", "--i", "3", "--c", "1",
               "--alpha0", "1", "--k0", "0"],
        capture_output=True, text=True)
    assert numeric.returncode == 3
    diag = json.loads(numeric.stderr.strip())
    assert diag["error"] == "SingularityError"
    ok = subprocess.run(RUN + ["pansu", "--lambda", "1", "--samples", "2"],
                        capture_output=True, text=True)
    assert ok.returncode == 0


def test_io_error_exit_code(tmp_path):
    bad = tmp_path / "no_such_dir" / "out.csv"
    res = subprocess.run(
        RUN + ["pansu", "--lambda", "1", "--samples", "2", "--out", str(bad)],
        capture_output=True, text=True)
    assert res.returncode == 1
    assert "I/O error" in res.stderr


def test_selftest_passes():
    res = subprocess.run(RUN + ["selftest"], capture_output=True, text=True)
    assert res.returncode == 0
    assert "all" in res.stdout and "passed" in res.stdout


def test_log_env_var():
    res = subprocess.run(
        RUN + ["pansu", "--lambda", "1", "--samples", "2"],
        capture_output=True, text=True, env={"SIGMAK_LOG": "debug",
                                             "PATH": "/usr/bin:/bin"})
    assert res.returncode == 0
