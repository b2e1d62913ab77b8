import json
import subprocess
import sys

import pytest

from triangpoly.cli import main
from triangpoly.complexes import chain_to_json
from triangpoly.fixtures import dumps

from conftest import fixture_complex


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def report(out):
    data = json.loads(out)
    data.pop("wall_time_s")
    return data


def test_p_handle_examples(capsys):
    code, out, err = run(capsys, "p", "cp2-embedding")
    assert code == 0
    assert report(out)["results"]["P"]["string"] == "A + B"
    assert "P = A + B" in err
    code, out, _ = run(capsys, "p", "s2xs2-embedding")
    assert report(out)["results"]["P"]["string"] == "A^2 + 2 + B^2"


def test_pbar_and_flip(capsys):
    _, out, _ = run(capsys, "p", "cp2-embedding", "--pbar")
    assert report(out)["results"]["Pbar"]["string"] == "A+ + B+"
    _, out, _ = run(capsys, "p", "cp2-embedding", "--pbar", "--flip-orientation")
    assert report(out)["results"]["Pbar"]["string"] == "A- + B-"


def test_tutte_examples(capsys):
    code, out, err = run(capsys, "tutte", "bd3simplex", "--n", "1")
    assert code == 0
    assert "spanning-tree evaluation T(0,0) = 16" in err
    code, out, err = run(capsys, "tutte", "triangle", "--n", "1")
    assert report(out)["results"]["T"]["string"] == "X^2 + 3X + 3 + Y"
    code, out, _ = run(capsys, "tutte", "bd5simplex", "--n", "2")
    assert report(out)["results"]["T(1,1)"] == str(2 ** 20)


def test_report_shape(capsys):
    _, out, _ = run(capsys, "tutte", "triangle", "--n", "1")
    data = json.loads(out)
    assert set(data) == {"command", "input", "flags", "results", "checks", "subsets", "wall_time_s"}
    assert len(data["input"]["sha256"]) == 64
    assert data["subsets"] == 8


def test_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "tutte", str(bad))[0] == 2
    assert run(capsys, "tutte", str(tmp_path / "missing.json"))[0] == 2
    wrong = tmp_path / "wrong.json"
    wrong.write_text(json.dumps({"dims": [1, 1], "boundaries": [{"rows": 1, "cols": 1, "entries": [[0, 0, "1"]]}],
                                 "extra": 1}))
    assert run(capsys, "p", str(wrong))[0] == 2
    assert run(capsys, "tutte", "bd5simplex", "--n", "2", "--cap", "10")[0] == 3
    assert run(capsys, "p", "torus-2loop-embedding", "--pbar")[0] == 4
    assert run(capsys, "pairing", "klein")[0] == 5
    assert run(capsys, "pairing", "rp2")[0] == 5
    notsphere = tmp_path / "ns.json"
    notsphere.write_text(json.dumps({"facets": [[0, 1, 2], [3, 4], [4, 5], [3, 5]]}))
    code, out, err = run(capsys, "verify", "sphere-t", str(notsphere))
    assert code == 1
    assert "counterexample selector 0x" in err
    assert any(c["counterexample"] for c in json.loads(out)["checks"])


def test_schema_c_validation_error(capsys, tmp_path):
    doc = json.loads(open_fixture("s2xs2-embedding"))
    doc["Q"] = {"rows": 2, "cols": 2, "entries": [[0, 1, "1"], [1, 0, "-1"]]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "p", str(path))
    assert code == 2
    assert "symmetric" in err


def open_fixture(name):
    from triangpoly.fixtures import fixture_text

    return fixture_text(name)


def test_pairing_outputs(capsys, tmp_path):
    code, out, err = run(capsys, "pairing", "torus7")
    assert code == 0
    assert "r = 2" in err and "antisymmetric" in err and "|det Q| = 1" in err
    assert out == open_fixture("torus7-embedding")
    code, out, err = run(capsys, "pairing", "bd5simplex")
    assert "r = 0" in err
    target = tmp_path / "t.json"
    run(capsys, "pairing", "torus7", "--flip-orientation", "-o", str(target))
    assert json.loads(target.read_text())["Q"] != json.loads(open_fixture("torus7-embedding"))["Q"]


def test_dualize_involution_schema_b(capsys, tmp_path):
    src = tmp_path / "torus.json"
    src.write_text(dumps(chain_to_json(fixture_complex("torus7"))))
    once = tmp_path / "once.json"
    twice = tmp_path / "twice.json"
    assert run(capsys, "dualize", str(src), "-o", str(once))[0] == 0
    assert run(capsys, "dualize", str(once), "-o", str(twice))[0] == 0
    assert twice.read_bytes() == src.read_bytes()
    assert once.read_bytes() != src.read_bytes()


def test_dualize_examples(capsys, tmp_path):
    code, out, err = run(capsys, "dualize", "bd3simplex")
    assert json.loads(out)["dims"] == [4, 6, 4]
    d = tmp_path / "dual.json"
    run(capsys, "dualize", "s2xs2-embedding", "-o", str(d))
    _, out, _ = run(capsys, "p", str(d))
    assert report(out)["results"]["P"]["string"] == "A^2 + 2 + B^2"


def test_verify_suites(capsys):
    for suite, inp in [("sphere-t", "bd3simplex"), ("matroid", "bd3simplex"),
                       ("p-duality", "s2xs2-embedding"), ("identities", "torus-2loop-embedding"),
                       ("specialize", "cp2-embedding")]:
        code, out, err = run(capsys, "verify", suite, inp)
        assert code == 0, err
        assert all(c["passed"] for c in json.loads(out)["checks"])


def test_count_and_matroid_commands(capsys):
    code, out, err = run(capsys, "count", "spanning-trees", "bd3simplex", "--n", "1", "--brute-force")
    assert code == 0
    r = report(out)["results"]
    assert r["T(0,0)"] == r["brute_force"] == "16"
    _, out, _ = run(capsys, "count", "flat", "torus-2loop-embedding")
    assert report(out)["results"]["P(1,1,0,1)"] == "3"
    _, out, _ = run(capsys, "matroid-tutte", "bd3simplex", "--n", "1")
    _, out2, _ = run(capsys, "tutte", "bd3simplex", "--n", "1")
    assert report(out)["results"]["T_M"]["terms"] == report(out2)["results"]["T"]["terms"]


def test_deterministic_across_jobs(capsys):
    _, a, _ = run(capsys, "tutte", "bd4simplex", "--n", "2", "--jobs", "1")
    _, b, _ = run(capsys, "tutte", "bd4simplex", "--n", "2", "--jobs", "3")
    ra, rb = report(a), report(b)
    assert ra == rb
    _, a, _ = run(capsys, "p", "s2xs2-embedding", "--jobs", "1")
    _, b, _ = run(capsys, "p", "s2xs2-embedding", "--jobs", "2")
    assert report(a) == report(b)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "triangpoly", "p", "cp2-embedding"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["P"]["string"] == "A + B"
    assert "P = A + B" in proc.stderr


def test_usage_error_is_argparse_exit():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "no-such-suite", "x"])
    assert exc.value.code == 2
