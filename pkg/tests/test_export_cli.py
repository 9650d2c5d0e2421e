import json

import numpy as np
import pytest

from elliptri import catalog, parse_face_list
from elliptri.cli import main
from elliptri.errors import UnsupportedFormat
from elliptri.export import export, to_dict, tutte_layout
from elliptri.patches import build_200


def test_off_for_tetrahedron():
    lines = export(catalog.closed("(4,0,0,0)"), "off").splitlines()
    assert lines[0] == "OFF" and lines[1] == "4 4 6"
    pts = np.array([[float(x) for x in ln.split()] for ln in lines[2:6]])
    # points are lifted onto the unit sphere
    assert np.allclose(np.linalg.norm(pts, axis=1), 1.0)


def test_tutte_layout_is_barycentric():
    p = catalog.patch("(0,0,6,3)_6")
    pos = tutte_layout(p)
    for v in p.interior:
        mean = np.mean([pos[u] for u in p.neighbors(v)], axis=0)
        assert np.allclose(pos[v], mean)


def test_json_fields():
    d = to_dict(catalog.patch("(1,1,1,2)_4"))
    assert d["signature"]["beta4"] == 1 and d["signature"]["beta5"] == 1
    assert d["f3"] == 4 and len(d["boundary"]) == 4


def test_unsupported():
    with pytest.raises(UnsupportedFormat):
        export(catalog.closed("(4,0,0,0)"), "ply")
    with pytest.raises(UnsupportedFormat):
        export(build_200(3, 0), "off")


@pytest.fixture
def tetra_file(tmp_path):
    f = tmp_path / "t.tri"
    f.write_text("triangles: 123 134 142 243\n")
    return f


def test_cli_validate_and_analyze(tetra_file, capsys):
    assert main(["validate", str(tetra_file)]) == 0
    assert main(["analyze", str(tetra_file), "--format", "json"]) == 0
    out = capsys.readouterr().out
    data = json.loads(out[out.index("{"):])
    assert data["signature"]["notation"] == "(4,0,0,0)"


def test_cli_validation_failure(tmp_path, capsys):
    f = tmp_path / "bad.tri"
    f.write_text("123 124 125\n")
    assert main(["validate", str(f)]) == 2
    assert main(["analyze", str(f)]) == 2
    assert "NonManifoldEdge" in capsys.readouterr().err


def test_cli_domain_error(capsys):
    assert main(["corner", "cut", "2.1/(1,1,1,2)_3", "--at", "3"]) == 3
    assert "error:" in capsys.readouterr().err


def test_cli_letter_labels(capsys):
    assert main(["corner", "cut", "(1,1,1,2)_4", "--at", "5"]) == 3
    assert "ForbiddenChord" in capsys.readouterr().err
    assert main(["consum", "--t1", "(0,6,0,0)", "--tri1", "1,2,Q",
                 "--t2", "(0,6,0,0)", "--tri2", "1,2,3"]) == 3
    assert "(1, 2, 26)" in capsys.readouterr().err


def test_cli_catalog_and_build(capsys):
    assert main(["catalog", "show", "(0,6,0,0)"]) == 0
    assert main(["build", "p030", "--h", "3", "--k", "1"]) == 0
    out = capsys.readouterr().out
    assert "(0,3,0,9)_9" in out


def test_cli_fuller_and_glue(tmp_path, capsys):
    assert main(["fuller", "(4,0,0,0)", "--mode", "face"]) == 0
    assert "(4,0,0,4)" in capsys.readouterr().out
    assert main(["glue", "2.4/(0,0,6,3)_6", "2.4/(0,0,6,3)_6", "--belts", "1"]) == 0
    assert "(0,0,12,12)" in capsys.readouterr().out


def test_cli_rewrite_and_formula(capsys):
    assert main(["rewrite", "(2,2,2,0)", "--kind", "A"]) == 0
    assert "(2,2,2,1)" in capsys.readouterr().out
    assert main(["formula", "--name", "N_030", "--params", "h=3"]) == 0
    assert capsys.readouterr().out.strip() == "N=7"


def test_cli_exists_unknown(capsys):
    assert main(["exists", "--type", "0,6,0", "--n6", "1", "--enum-cap", "8"]) == 0
    assert "NotExists(enumerated)" in capsys.readouterr().out


def test_cli_enumerate_archive(tmp_path, capsys):
    out = tmp_path / "arch"
    assert main(["enumerate", "closed", "--n", "7", "--out", str(out)]) == 0
    files = sorted(out.iterdir())
    assert len(files) == 5
    assert parse_face_list(files[0].read_text()).f1 == 7


def test_cli_export(tetra_file, tmp_path):
    dest = tmp_path / "t.off"
    assert main(["export", str(tetra_file), "--to", "off", "--out", str(dest)]) == 0
    assert dest.read_text().startswith("OFF")
