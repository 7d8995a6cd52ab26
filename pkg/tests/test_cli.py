import json
import shutil
import subprocess

import pytest

from permpoly import cli

KLEIN = {"label": "klein", "degree": 4, "generators": ["(1 2)", "(3 4)"]}
KLEIN_REGULAR = {"degree": 4, "generators": ["(1 2)(3 4)", "(1 3)(2 4)"]}
Z4 = {"degree": 4, "generators": ["(1 2 3 4)"]}
Z4_DEG6 = {"degree": 6, "generators": ["(1 2 3 4)(5 6)"]}
S3 = {"degree": 3, "generators": ["(1 2)", "(1 2 3)"]}


def spec_file(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def pair_file(tmp_path, name, first, second):
    return spec_file(tmp_path, name, {"first": first, "second": second})


def test_dim_output(tmp_path, capsys):
    assert cli.main(["dim", spec_file(tmp_path, "g.json", KLEIN)]) == 0
    out = capsys.readouterr().out
    assert out == ("label: klein\n"
                   "order: 4\n"
                   "degree: 4\n"
                   "vertices: 4\n"
                   "dim: 2\n"
                   "shape: product(1, 1)\n")


def test_stable_identified_pair(tmp_path, capsys):
    pair = pair_file(tmp_path, "p.json", Z4, Z4_DEG6)
    assert cli.main(["stable", pair]) == 0
    out = capsys.readouterr().out
    assert "identify: (1 2 3 4) -> (1 2 3 4)(5 6)" in out
    assert "stable_by_kernel: true" in out
    assert "stable_by_characters: true" in out
    assert "routes_agree: true" in out


def test_stable_needs_an_identification(tmp_path, capsys):
    pair = pair_file(tmp_path, "p.json", KLEIN, Z4)
    assert cli.main(["stable", pair]) == 2
    assert "error:" in capsys.readouterr().err


def test_effective_negative(tmp_path, capsys):
    pair = pair_file(tmp_path, "p.json", KLEIN, KLEIN_REGULAR)
    assert cli.main(["effective", pair]) == 0
    out = capsys.readouterr().out
    assert "effectively_equivalent: false" in out
    assert "witness" not in out


def test_effective_positive(tmp_path, capsys):
    z4b = {"degree": 4, "generators": ["(1 3 2 4)"]}
    pair = pair_file(tmp_path, "p.json", Z4, z4b)
    assert cli.main(["effective", pair]) == 0
    out = capsys.readouterr().out
    assert "effectively_equivalent: true" in out
    assert "witness: (1 2 3 4) -> " in out


def test_chartable_s3(tmp_path, capsys):
    assert cli.main(["chartable", spec_file(tmp_path, "g.json", S3)]) == 0
    out = capsys.readouterr().out
    assert "classes: 3\n" in out
    assert "conductor: 6\n" in out
    assert "route: class-matrix\n" in out
    assert "class sizes: 1 3 2\n" in out
    assert "class reps: id (1 2) (1 2 3)\n" in out
    assert "chi_0 (degree 1): 1 | 1 | 1\n" in out
    assert "chi_1 (degree 1): 1 | -1 | 1\n" in out
    assert "chi_2 (degree 2): 2 | 0 | -1\n" in out


def test_faces_square(tmp_path, capsys):
    assert cli.main(
        ["faces", "--order", "2", spec_file(tmp_path, "g.json", KLEIN)]) == 0
    out = capsys.readouterr().out
    assert "subgroups: 3\n" in out
    assert "faces: 2\n" in out
    assert out.count("face of dim 1") == 2
    assert out.count("not a face") == 1
    assert "<(1 2)(3 4)>: not a face" in out


def test_faces_rejects_bad_order(tmp_path, capsys):
    assert cli.main(
        ["faces", "--order", "5", spec_file(tmp_path, "g.json", KLEIN)]) == 2
    assert "error:" in capsys.readouterr().err


def test_lattice_square(tmp_path, capsys):
    assert cli.main(["lattice", spec_file(tmp_path, "g.json", KLEIN)]) == 0
    out = capsys.readouterr().out
    assert "lattice index: 1\n" in out
    assert "normalized volume: not a simplex\n" in out


def test_lattice_simplex(tmp_path, capsys):
    assert cli.main(["lattice", spec_file(tmp_path, "g.json", Z4)]) == 0
    out = capsys.readouterr().out
    assert "normalized volume: " in out
    assert "euclidean volume: " in out


def test_reproduce_unknown_id(capsys):
    assert cli.main(["reproduce", "no-such-scenario"]) == 2
    assert "unknown scenario" in capsys.readouterr().err


def test_reproduce_klein_volume(tmp_path, capsys):
    out_json = tmp_path / "report.json"
    assert cli.main(["reproduce", "klein-volume", "--json",
                     str(out_json)]) == 0
    first = capsys.readouterr().out
    assert first.startswith("scenario: klein-volume\n")
    assert "result: PASS (9/9 checks)" in first
    assert "[PASS] volume-degree6: expected \"1/3\"" in first

    raw = out_json.read_text(encoding="utf-8")
    payload = json.loads(raw)
    from permpoly.report import canonical_json
    assert canonical_json(payload) == raw
    assert payload["scenario"] == "klein-volume"
    assert payload["pass"] is True
    assert len(payload["checks"]) == 9
    for check in payload["checks"]:
        assert set(check) == {"name", "expected", "computed", "pass"}
        assert check["pass"] is True
    assert isinstance(payload["elapsed_ms"], int)
    assert payload["elapsed_ms"] >= 0

    # stdout is timing-free: a second run is byte-identical
    assert cli.main(["reproduce", "klein-volume", "--json",
                     str(out_json)]) == 0
    assert capsys.readouterr().out == first
    payload2 = json.loads(out_json.read_text(encoding="utf-8"))
    payload.pop("elapsed_ms")
    payload2.pop("elapsed_ms")
    assert payload == payload2


def test_bad_spec_files(tmp_path, capsys):
    cases = [
        {"degree": 0, "generators": []},
        {"degree": True, "generators": []},
        {"degree": 4, "generators": "(1 2)"},
        {"degree": 4, "generators": ["(1 5)"]},
        {"degree": 4, "generators": ["(1 2)"], "extra": 1},
        {"degree": 4, "generators": ["(1 2)"], "label": 7},
        ["not", "an", "object"],
    ]
    for i, doc in enumerate(cases):
        path = spec_file(tmp_path, "bad%d.json" % i, doc)
        assert cli.main(["dim", path]) == 2, doc
        assert "error:" in capsys.readouterr().err
    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    assert cli.main(["dim", str(broken)]) == 2
    assert cli.main(["dim", str(tmp_path / "missing.json")]) == 2
    assert cli.main(
        ["stable", spec_file(tmp_path, "pair.json", {"first": KLEIN})]) == 2
    capsys.readouterr()


def test_cap_resolution(tmp_path, capsys, monkeypatch):
    spec = spec_file(tmp_path, "g.json", KLEIN)
    monkeypatch.setenv("PPT_CAP", "2")
    assert cli.main(["dim", spec]) == 2  # order 4 exceeds the env cap
    assert cli.main(["dim", "--cap", "1000", spec]) == 0  # flag wins
    monkeypatch.setenv("PPT_CAP", "notanint")
    assert cli.main(["dim", spec]) == 2
    monkeypatch.delenv("PPT_CAP")
    assert cli.main(["dim", "--cap", "0", spec]) == 2
    assert cli.main(["dim", spec]) == 0
    capsys.readouterr()


def test_missing_subcommand_is_a_usage_error():
    with pytest.raises(SystemExit) as exc:
        cli.main([])
    assert exc.value.code == 2


def test_console_script_help():
    exe = shutil.which("ppt")
    assert exe is not None
    out = subprocess.run([exe, "--help"], capture_output=True, text=True)
    assert out.returncode == 0
    assert "reproduce" in out.stdout
