import json

import pytest

from arcop.cli import main
from arcop.core import dot, unit
from arcop.serialize import decode, encode, save


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


@pytest.fixture
def files(tmp_path):
    save(unit(), tmp_path / "unit.json")
    save(dot(), tmp_path / "dot.json")
    return tmp_path


def test_compose_unit_with_unit(capsys, files):
    code, out = run(capsys, "compose", "-i", "1", str(files / "unit.json"), str(files / "unit.json"))
    assert code == 0
    assert out.strip().encode() == encode(unit())


def test_compose_modes(capsys, files):
    for mode in ("--weighted", "--projective", "--relaxed"):
        code, out = run(capsys, "compose", "-i", "2", mode, "--offset", "1/3", str(files / "dot.json"),
                        str(files / "dot.json"))
        assert code == 0 and decode(out).boundaries == 4


def test_laws_exit_zero(capsys):
    code, out = run(capsys, "laws", "--suite", "arc", "--trials", "200", "--seed", "7")
    assert code == 0 and json.loads(out)["failures"] == 0


def test_classify_reports_three_families(capsys):
    code, out = run(capsys, "circles", "classify", "--grid", "2")
    rep = json.loads(out)
    assert code == 0
    assert rep["families"] == ["Q", "bi", "rd(lambda)"]
    assert rep["matches_classification"] and rep["counterexamples_stored"]


def test_other_circle_commands(capsys):
    code, out = run(capsys, "circles", "homology", "000", "-i", "1", "10")
    assert code == 0 and json.loads(out)["text"] == "(1,0,0) + (0,0,1)"
    code, out = run(capsys, "circles", "compose", "--operad", "d", "1/2", "-i", "1", "1/3")
    assert json.loads(out)["result"] == ["5/6"]
    assert run(capsys, "circles", "presentation")[0] == 0
    assert run(capsys, "circles", "relations", "--operad", "rd(2)")[0] == 0


def test_validate_and_errors(capsys, files):
    assert run(capsys, "validate", str(files / "unit.json")) == (0, '{"type":"family","valid":true}\n')
    bad = files / "bad.json"
    bad.write_text((files / "unit.json").read_text().replace('"weight":"1"', '"weight":"2/4"'))
    code, out = run(capsys, "validate", str(bad))
    assert code == 1 and json.loads(out)["path"] == "$.arcs[0].weight"
    assert run(capsys, "validate", str(files / "missing.json"))[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "compose", "-i", "9", str(files / "unit.json"), str(files / "unit.json"))[0] == 2


def test_frame_loop_section_render_random(capsys, files, tmp_path):
    from arcop.cacti import random_cactus

    save(random_cactus(2, 3), tmp_path / "c.json")
    code, out = run(capsys, "frame", str(tmp_path / "c.json"))
    assert code == 0
    (tmp_path / "f.json").write_text(out)
    code, out = run(capsys, "loop", str(tmp_path / "f.json"))
    (tmp_path / "k.json").write_text(out)
    code, out = run(capsys, "section", str(tmp_path / "k.json"))
    assert code == 0 and decode(out) == decode((tmp_path / "f.json").read_text())
    code, _ = run(capsys, "render", str(tmp_path / "c.json"), "--model", "planar-loop", "-o", str(tmp_path / "c.svg"))
    assert code == 0 and (tmp_path / "c.svg").read_text().startswith("<svg")
    code, out = run(capsys, "random", "--seed", "3", "--bounds", '{"genus": 1, "boundaries": 3}')
    assert code == 0 and decode(out).genus <= 1
    assert run(capsys, "random", "--bounds", "[1]")[0] == 2


def test_bv_check(capsys):
    code, out = run(capsys, "bv-check", "--identity", "i")
    assert code == 0 and json.loads(out)["passed"]
