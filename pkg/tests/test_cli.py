import json
import subprocess
import sys

import pytest

from noc.cli import run
from noc.orbitdata import dataset_json


def out(capsys, *argv, code=0):
    assert run(list(argv)) == code
    return capsys.readouterr().out


def test_degrees(capsys):
    assert out(capsys, "degrees", "--orbit", "C") == "72\n"
    assert out(capsys, "degrees", "--orbit", "A_inf") == "6\n"
    data = json.loads(out(capsys, "degrees", "--format", "json"))
    assert {d["orbit"]: d["degree"] for d in data}["D*"] == 45


def test_classes(capsys):
    assert out(capsys, "classes", "--orbit", "C") == "8*(v1 - 2*u1)^2\n"
    assert out(capsys, "classes", "--orbit", "A_mu") == "4*(v1 - 2*u1)\n"
    expanded = out(capsys, "classes", "--orbit", "D", "--expanded").strip()
    assert expanded == "3*v2 + 3*v1^2 - 16*u1*v1 - 3*u2 + 17*u1^2"
    data = json.loads(out(capsys, "classes", "--orbit", "C", "--format", "json"))
    assert data["degree"] == 2 and data["class"] == "8*(v1 - 2*u1)^2"


def test_orbits(capsys):
    lines = out(capsys, "orbits", "--list").splitlines()
    assert len(lines) == 24 and lines[0].startswith("C ")
    detail = out(capsys, "orbits", "--orbit", "(1^4)")
    assert "tabulated:" in detail and "positive (search)" in detail
    assert "not positive" in out(capsys, "orbits", "--orbit", "D")
    data = json.loads(out(capsys, "orbits", "--format", "json"))
    assert len(data) == 24 and data[0]["positivity"]["positive"]


def test_multiplicities(capsys):
    text = out(capsys, "multiplicities", "--target", "K")
    assert text.startswith("delta^*[K] = 12*[(1^4)] + 4*[G] + 1/2*[G*] - 4*u1*[F] + 2*v1*[F]")
    data = json.loads(out(capsys, "multiplicities", "--format", "json"))
    assert [d["target"] for d in data] == ["nu", "theta", "Omega", "A", "K"]
    assert all(d["unique"] and d["verified"] for d in data)


def test_invariants(capsys, tmp_path):
    table = out(capsys, "invariants")
    assert "D*       -8    16   4" in table
    assert "k = 48/11" in out(capsys, "invariants", "--slice", "1", "2")
    net = tmp_path / "net.json"
    net.write_text(json.dumps({"quadrics": [[1, 0, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 0, 1]]}))
    data = json.loads(out(capsys, "invariants", "--net", str(net), "--format", "json"))
    assert (data["corank"], data["J6"], data["J12"], data["k"]) == (0, "1/1", "1/1", "1/1")
    assert "corank 3" in out(capsys, "invariants", "--orbit", "0")


def test_thom(capsys):
    assert out(capsys, "thom", "--orbit", "A_finite") == "4*D[3331] + 8*D[433]\n"
    data = json.loads(out(capsys, "thom", "--orbit", "A_finite", "--format", "json"))
    assert data["degree"] == 10 and data["p"] == 3


def test_hierarchy(capsys, graph):
    text = out(capsys, "hierarchy")
    assert "? D -> E " in text and "? D* -> E* " in text
    assert "B -> D  [k-invariant]" in text
    data = json.loads(out(capsys, "hierarchy", "--format", "json"))
    assert len(data["edges"]) == len(graph.edges)
    dot = out(capsys, "hierarchy", "--format", "dot", "--all-edges")
    assert dot.count("->") == len(graph.edges)


def test_fixtures_directory(capsys, tmp_path):
    (tmp_path / "orbits.json").write_text(json.dumps(dataset_json()))
    assert out(capsys, "degrees", "--orbit", "D", "--fixtures", str(tmp_path)) == "36\n"
    assert out(capsys, "classes", "--orbit", "C", "--fixtures", str(tmp_path)) == "8*(v1 - 2*u1)^2\n"
    # the orbit listing is itself a valid fixture file
    (tmp_path / "orbits.json").write_text(out(capsys, "orbits", "--format", "json"))
    assert out(capsys, "degrees", "--orbit", "D*", "--fixtures", str(tmp_path)) == "45\n"


def test_verify_subset(capsys):
    data = json.loads(out(capsys, "verify-all", "--only", "2,3", "--format", "json"))
    assert data["ok"] and [c["id"] for c in data["checks"]] == [2, 3]
    assert "seconds" not in data["checks"][0]


def test_verify_failure_sets_exit_code(capsys):
    text = out(capsys, "verify-all", "--only", "10", code=1)
    assert text.startswith("[             FAIL] 10 positivity")


def test_errors(capsys):
    assert run(["degrees", "--orbit", "nope"]) == 1
    assert "unknown orbit" in capsys.readouterr().err
    assert run(["degrees", "--fixtures", "/nonexistent/dir"]) == 1
    assert run(["verify-all", "--only", "99"]) == 1
    with pytest.raises(SystemExit) as exc:
        run(["thom"])
    assert exc.value.code == 2


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "noc.cli", "degrees", "--orbit", "D*"],
                         capture_output=True, text=True, check=True)
    assert res.stdout == "45\n"
