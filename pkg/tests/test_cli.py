import json

import numpy as np
import pytest

from sqwalk import io as sio
from sqwalk.cli import main

GOLDEN = np.array([[3, -3, 3, 3, 0],
                   [-3, 3, 3, 3, 0],
                   [1, 1, 3, -3, 4],
                   [1, 1, -3, 3, 4],
                   [4, 4, 0, 0, -2]]) / 6


def structured(out: str) -> dict:
    return json.loads(out.split("\n---\n", 1)[1])


@pytest.fixture
def models(tmp_path):
    for kind in ("fig1", "barbell-a", "barbell-b", "three-state"):
        assert main(["model", kind, "--out", str(tmp_path / kind)]) == 0
    return tmp_path


def test_classify_fig1(models, capsys):
    capsys.readouterr()
    assert main(["classify", "--graph", str(models / "fig1" / "graph.edges")]) == 0
    report = structured(capsys.readouterr().out)
    assert report["class"] == "Class2a"
    assert report["krausz"]["coloring"] is None and report["krausz"]["elements"]


def test_classify_by_name(capsys):
    assert main(["classify", "--name", "claw"]) == 0
    assert structured(capsys.readouterr().out)["beineke"]["index"] == 1


def test_evolve_dump_dense(models, capsys):
    capsys.readouterr()
    d = models / "fig1"
    assert main(["evolve", "--graph", str(d / "graph.edges"), "--tess", str(d / "tessellation.json"),
                 "--dump-dense"]) == 0
    u = sio.parse_dense(capsys.readouterr().out)
    assert np.max(np.abs(u - GOLDEN)) < 1e-12


def test_convert_exit_codes(models, capsys):
    a, b = models / "barbell-a", models / "barbell-b"
    assert main(["convert", "--graph", str(a / "graph.edges"), "--tess", str(a / "tessellation.json")]) == 1
    err = capsys.readouterr().err.strip().splitlines()
    assert len(err) == 1 and err[0].startswith("error: EdgeInIntersection:")
    assert main(["convert", "--graph", str(b / "graph.edges"), "--tess", str(b / "tessellation.json")]) == 0
    report = structured(capsys.readouterr().out)
    assert report["block_check"] and report["idle_dimension"] == 4


def test_convert_coined_three_state(models, capsys):
    capsys.readouterr()
    d = models / "three-state"
    assert main(["convert", "--graph", str(d / "graph.edges"), "--tess", str(d / "tessellation.json"),
                 "--blue-amps", str(d / "blue_amplitudes.csv"), "--coined"]) == 0
    report = structured(capsys.readouterr().out)
    assert report["coined"]["recompose_deviation"] < 1e-10


def test_tessellate(models, capsys, tmp_path):
    capsys.readouterr()
    assert main(["tessellate", "--name", "hajos"]) == 1
    assert "error: NotTwoTessellable" in capsys.readouterr().err
    assert main(["tessellate", "--name", "fig1", "--out", str(tmp_path / "t")]) == 0
    report = structured(capsys.readouterr().out)
    assert report["valid"] and report["tessellations"]["blue"] == [[0, 1, 2, 3], [4]]
    d = models / "fig1"
    assert main(["tessellate", "--graph", str(d / "graph.edges"), "--tess", str(d / "tessellation.json")]) == 0
    assert structured(capsys.readouterr().out)["intersection_edges"][0] == [0, 1]


def test_usage_errors(capsys):
    assert main([]) == 2
    assert main(["classify", "--graph", "/no/such/file"]) == 2
    assert main(["classify", "--bogus"]) == 2
    assert main(["classify", "--name", "fig1", "--graph", "x"]) == 2
    assert main(["search", "--n-list", "a,b"]) == 2
    assert main(["classify", "--name", "petersen"]) == 1


def test_outputs_are_deterministic(tmp_path, capsys):
    args = ["search", "--n-list", "2,3,4,5,6", "--t-max", "30"]
    assert main(args + ["--out", str(tmp_path / "a")]) == 0
    assert main(args + ["--out", str(tmp_path / "a2")]) == 0
    files = sorted(p.name for p in (tmp_path / "a").iterdir())
    assert "fit.json" in files and "p_n4.csv" in files and "meta.json" in files
    for name in files:
        if name != "meta.json":
            assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "a2" / name).read_bytes()
    fit = json.loads((tmp_path / "a" / "fit.json").read_text())
    assert {"a", "b", "c", "d", "residual_t", "residual_p"} <= set(fit["fit"])
    assert fit["points"][0]["t_star"] is None  # n=2 never peaks and is skipped


def test_tolerance_override_warns(models, tmp_path, capsys):
    b = models / "barbell-b"
    out = tmp_path / "conv"
    assert main(["convert", "--graph", str(b / "graph.edges"), "--tess", str(b / "tessellation.json"),
                 "--tol", "1e-8", "--out", str(out)]) == 0
    meta = json.loads((out / "meta.json").read_text())
    assert meta["warnings"] and "1e-08" in meta["warnings"][0]
    assert "time" not in json.dumps(meta)
