import io
import json
import subprocess
import sys

import pytest

from qcl.cli import run
from qcl.lace import LaceDiagram
from qcl.polynomial import Poly
from qcl.quiver import Orbit, Quiver

RANK1_JSON = '{"s":{"0,0":1,"0,1":1,"1,1":1}}'


def call(*argv):
    out = io.StringIO()
    status = run(list(argv), out)
    return status, out.getvalue()


def test_class_example():
    status, text = call("class", "--quiver", ">", "--dims", "2,2", "--orbit", RANK1_JSON)
    assert status == 0
    assert text == "+1*x1_1 +1*x1_2 -1*x0_1 -1*x0_2\n"


def test_class_latex():
    status, text = call("class", "--quiver", ">", "--dims", "2,2", "--orbit", RANK1_JSON, "--format", "latex")
    assert status == 0 and text.strip() == "x^{1}_{1} + x^{1}_{2} - x^{0}_{1} - x^{0}_{2}"


def test_verify_all_example():
    status, text = call("verify", "--quiver", ">", "--dims", "2,2", "--orbit", "all")
    assert status == 0
    assert text.count("PASS") == 3 and "FAIL" not in text


def test_minimal_from_perms_example():
    status, text = call(
        "minimal", "--quiver", "><>>", "--dims", "3,4,4,3,3", "--orbit-from-perms", "12453;536412;13524;24513"
    )
    assert status == 0
    lines = text.splitlines()
    assert len(lines) == 4
    assert "12453;152634;13524;14523  length=14" in lines
    assert all(line.endswith("length=14") for line in lines)


def test_minimal_json_round_trip():
    status, text = call(
        "minimal", "--quiver", "><>>", "--dims", "3,4,4,3,3", "--orbit-from-perms", "12453;536412;13524;24513",
        "--format", "json",
    )
    doc = json.loads(text)
    q = Quiver.parse(doc["quiver"])
    (entry,) = doc["results"]
    mu = Orbit.from_json({"s": entry["orbit"]}, n=q.n)
    for perms in entry["diagrams"]:
        d = LaceDiagram.from_json({"quiver": doc["quiver"], "dims": doc["dims"], "perms": perms})
        assert d.orbit() == mu and d.length == entry["codim"] == 14


def test_orbits_listing():
    status, text = call("orbits", "--quiver", ">", "--dims", "2,2")
    assert status == 0
    assert text.splitlines() == [
        "{s01=2}  codim=0",
        "{s00=1, s01=1, s11=1}  codim=1",
        "{s00=2, s11=2}  codim=4",
    ]


def test_codim_single():
    assert call("codim", "--quiver", ">", "--dims", "2,2", "--orbit", RANK1_JSON) == (0, "1\n")


def test_euler_json():
    status, text = call("euler", "--quiver", ">", "--dims", "2,2", "--orbit", RANK1_JSON, "--format", "json")
    doc = json.loads(text)
    (entry,) = doc["results"]
    assert Poly.from_json(entry["euler"]).to_text() == "+1*b3 -1*b1"
    assert entry["strands"] == [[0, 0, 2], [0, 1, 1], [1, 1, 2]]


def test_class_json_round_trip():
    status, text = call("class", "--quiver", "><", "--dims", "1,2,1", "--orbit", "all", "--format", "json")
    doc = json.loads(text)
    assert doc["command"] == "class" and doc["dims"] == [1, 2, 1]
    for entry in doc["results"]:
        f = Poly.from_json(entry["class"])
        assert f.is_homogeneous(entry["codim"])


def test_kdiagrams_and_kclass():
    mu = '{"s":{"0,1":1,"1,2":1}}'
    status, text = call("kdiagrams", "--quiver", ">>", "--dims", "1,2,1", "--orbit", mu)
    assert status == 0
    assert text.splitlines() == ["+1;21  length=1", "+21;1  length=1", "-21;21  length=2"]
    status, text = call("kclass", "--quiver", ">>", "--dims", "1,2,1", "--orbit", mu, "--format", "json")
    assert status == 0 and Poly.from_json(json.loads(text)["results"][0]["kclass"]).laurent


def test_kcheck():
    status, text = call("kcheck", "--quiver", "<>", "--dims", "1,2,1", "--orbit", "all", "--format", "json")
    doc = json.loads(text)
    assert status == 0 and doc["pass"] is True
    status, _ = call("kcheck", "--quiver", ">", "--dims", "2,2", "--orbit", RANK1_JSON, "--trunc", "0")
    assert status == 1


def test_render_flag():
    status, text = call("minimal", "--quiver", ">", "--dims", "2,2", "--orbit", RANK1_JSON, "--render", "top")
    assert text == "132  length=1\n  o---o\n  o   o\n"


def test_strict_and_jobs():
    a = call("verify", "--quiver", "<>", "--dims", "1,1,1", "--orbit", "all", "--format", "json")
    b = call("verify", "--quiver", "<>", "--dims", "1,1,1", "--orbit", "all", "--format", "json", "--jobs", "2")
    assert a == b and a[0] == 0
    s = call("verify", "--quiver", "<>", "--dims", "1,1,1", "--orbit", "all", "--strict")
    assert s[0] == 0


@pytest.mark.parametrize(
    "argv, field",
    [
        (["class", "--quiver", ">", "--dims", "2,x", "--orbit", RANK1_JSON], "--dims"),
        (["class", "--quiver", ">", "--dims", "2,2,2", "--orbit", RANK1_JSON], "--dims"),
        (["class", "--quiver", ">?", "--dims", "2,2", "--orbit", RANK1_JSON], "--quiver"),
        (["class", "--quiver", ">", "--dims", "2,2", "--orbit", "{bad"], "--orbit"),
        (["class", "--quiver", ">", "--dims", "2,2", "--orbit", '{"s":{"0,0":1}}'], "--orbit"),
        (["class", "--quiver", ">", "--dims", "2,2"], "--orbit"),
        (["minimal", "--quiver", ">", "--dims", "2,2", "--orbit-from-perms", "1432"], "--orbit-from-perms"),
        (["verify", "--quiver", ">", "--dims", "2,2", "--orbit", "all", "--jobs", "0"], "--jobs"),
        (["kcheck", "--quiver", ">", "--dims", "2,2", "--orbit", "all", "--trunc", "-1"], "--trunc"),
    ],
)
def test_usage_errors(argv, field, capsys):
    status, text = call(*argv)
    assert status == 2 and text == ""
    err = capsys.readouterr().err.strip().splitlines()
    assert len(err) == 1 and err[0].startswith(f"qcl: error: {field}:")


def test_argparse_errors_exit_2(capsys):
    assert call("nonsense", "--quiver", ">", "--dims", "1,1")[0] == 2
    assert capsys.readouterr().err.count("\n") == 1
    assert call("class", "--dims", "1,1")[0] == 2
    assert "--quiver" in capsys.readouterr().err


def test_failed_verification_exits_1(monkeypatch):
    import qcl.classes as classes

    real = classes.orbit_class

    def corrupted(q, dims, mu):
        oc = real(q, dims, mu)
        return classes.OrbitClass(oc.orbit, oc.poly + 1, oc.codim)

    monkeypatch.setattr(classes, "orbit_class", corrupted)
    status, text = call("verify", "--quiver", ">", "--dims", "2,2", "--orbit", RANK1_JSON)
    assert status == 1 and text.startswith("FAIL")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qcl", "codim", "--quiver", ">", "--dims", "2,2", "--orbit", RANK1_JSON],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "1\n"
