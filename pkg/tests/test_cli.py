import json
import subprocess
import sys
from pathlib import Path

import pytest

from rootableaux.cli import main
from rootableaux.roots import build_root_system, fmt_root
from rootableaux.shapes import enumerate_standard_tableaux, placed_shape

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_roots_c2(capsys):
    code, out, _ = run(capsys, "roots", "-t", "C", "-r", "2")
    assert code == 0
    assert "positive roots (4):" in out and "|W| = 8" in out


@pytest.mark.parametrize("rank,count", [(1, 1), (2, 3)])
def test_roots_type_a_json(capsys, rank, count):
    code, out, _ = run(capsys, "roots", "-t", "A", "-r", str(rank), "--format", "json")
    assert code == 0 and len(json.loads(out)["positive_roots"]) == count


def test_tableaux_counts(capsys):
    _, out, _ = run(capsys, "tableaux", "-t", "C", "-r", "2", "--gamma", "0,1", "--J", "0,1")
    assert "|F| = 2" in out
    _, out, _ = run(capsys, "tableaux", "-t", "A", "-r", "2", "--gamma", "0,1/3,2/3")
    assert "|F| = 6" in out


def test_tableaux_reading_extremes_listed(capsys):
    args = ["tableaux", "-t", "A", "-r", "6", "--gamma=-1,-1,-1,0,0,1,1",
            "--J", "0,1,1,0,0,0;0,0,1,0,0,0;0,0,0,0,1,0;0,0,0,0,1,1", "--format", "json"]
    _, out, _ = run(capsys, *args)
    elements = json.loads(out)["elements"]
    assert "(1,3,4,2,7,5,6)" in elements and "(1,5,6,2,7,3,4)" in elements


def test_tableaux_render_golden(capsys):
    _, out, _ = run(capsys, "tableaux", "-t", "C", "-r", "2", "--gamma", "0,1", "--J", "0,1", "--render")
    assert out == (GOLDEN / "c2_tableaux.txt").read_text()


def test_render_two_pages_golden(capsys):
    _, out, _ = run(capsys, "render", "-t", "A", "-r", "3", "--gamma", "0,1/2,1,3/2", "--J", "1,1,0")
    assert out == (GOLDEN / "a3_two_pages.txt").read_text()


def test_render_rejects_outsider(capsys):
    code, _, err = run(capsys, "render", "-t", "C", "-r", "2", "--gamma", "0,1", "--J", "0,1", "--word", "1,2")
    assert code == 2 and "not a standard tableau" in err


def test_calib_text_and_dot(capsys):
    _, out, _ = run(capsys, "calib", "-t", "C", "-r", "2", "--gamma", "0,1")
    assert "vertices: 4" in out and "edges: 1" in out and "components: 3" in out
    _, out, _ = run(capsys, "calib", "-t", "C", "-r", "2", "--gamma", "0,1", "--format", "dot")
    assert out == (GOLDEN / "c2_calibration.dot").read_text()
    _, out, _ = run(capsys, "calib", "-t", "A", "-r", "2", "--gamma", "0,5,11", "--format", "json")
    assert len(json.loads(out)["components"]) == 1


def test_calib_components_match_shape_counts(capsys):
    R = build_root_system("B", 2)
    by_name = {fmt_root(r): r for r in R.positive_roots}
    _, out, _ = run(capsys, "calib", "-t", "B", "-r", "2", "--gamma", "1,2", "--format", "json")
    comps = json.loads(out)["components"]
    assert len(comps) > 1
    for comp in comps:
        shape = placed_shape(R, (1, 2), [by_name[name] for name in comp["J"]])
        assert comp["size"] == len(enumerate_standard_tableaux(shape))


@pytest.mark.parametrize("name", ["nonempty", "interval"])
def test_conjecture_type_a(capsys, name):
    code, out, _ = run(capsys, "conjecture", name, "-t", "A", "-r", "3")
    assert code == 0 and "no counterexample" in out


def test_conjecture_c2_report(capsys):
    code, out, _ = run(capsys, "conjecture", "interval", "-t", "C", "-r", "2", "--format", "json")
    report = json.loads(out)
    assert code == (4 if report["counterexample"] else 0)
    assert report["shapes_checked"] > 0


@pytest.mark.parametrize("n,value", [(2, "3"), (3, "10")])
def test_count_shi(capsys, n, value):
    code, out, _ = run(capsys, "count", "shi-dominant", "-n", str(n))
    assert code == 0 and out.splitlines()[0] == value


def test_count_calib_classes(capsys):
    _, out, _ = run(capsys, "count", "calib-classes", "-t", "A", "-n", "3")
    lines = out.splitlines()
    assert lines[0] == "7" and lines[1].startswith("generating function:")


def test_shape_json_round_trip(capsys, tmp_path):
    _, out, _ = run(capsys, "shape", "-t", "C", "-r", "2", "--gamma", "0,1", "--J", "0,1;1,1", "--format", "json")
    f = tmp_path / "s.json"
    f.write_text(out)
    _, again, _ = run(capsys, "shape", "--shape-file", str(f), "--format", "json")
    assert again == out
    _, inline, _ = run(capsys, "shape", "--shape", out, "--format", "json")
    assert inline == out


def test_shape_text(capsys):
    _, out, _ = run(capsys, "shape", "-t", "C", "-r", "2", "--gamma", "0,1", "--J", "0,1")
    assert "Z = {2e1}" in out and "|F| = 2" in out and "skew: False" in out


@pytest.mark.parametrize("argv,code", [
    (["roots", "-t", "E", "-r", "6"], 2),
    (["shape", "-t", "A", "-r", "2", "--gamma", "1,0,0"], 2),
    (["shape", "-t", "A", "-r", "2", "--gamma", "0,1,2", "--J", "1,1"], 2),
    (["shape", "--shape", "{bad"], 2),
    (["roots"], 2),
    (["tableaux", "-t", "B", "-r", "8", "--gamma", "0,0,0,0,0,0,0,1", "--cap", "1000"], 3),
    (["render", "-t", "A", "-r", "3", "--gamma", "0,1,2,3", "--boxes", "2"], 3),
    (["count", "calib-classes", "-t", "C", "-n", "2"], 2),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_deterministic_output():
    cmd = [sys.executable, "-m", "rootableaux", "tableaux", "-t", "B", "-r", "3", "--gamma", "0,1,2", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first


def test_console_script_parser_errors():
    out = subprocess.run([sys.executable, "-m", "rootableaux", "bogus"], capture_output=True)
    assert out.returncode == 2
