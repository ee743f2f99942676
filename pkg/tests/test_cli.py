import json

import pytest

from psp62 import claims
from psp62.cli import main
from psp62.constants import default_path


def test_explain_known(capsys):
    assert main(["explain", "nielsen.length"]) == 0
    out = capsys.readouterr().out
    assert "straight inner Nielsen class" in out and "of length 2" in out
    assert main(["explain", "census.unique-types"]) == 0
    assert "unique of type" in capsys.readouterr().out


def test_explain_unknown_lists_ids(capsys):
    assert main(["explain", "bogus"]) == 2
    err = capsys.readouterr().err
    assert "bogus" in err and "nielsen.length" in err and "dedekind.square-disc" in err


def test_explain_lists_all(capsys):
    assert main(["explain"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == len(claims.CLAIMS)


def test_cited_claims_marked():
    cited = {c.id for c in claims.CLAIMS.values() if c.kind == claims.CITED}
    assert {"cited.malle", "cited.beckmann", "cited.a36-min-degree", "cited.index-lemma"} <= cited
    assert all(c.kind in claims.STATUSES for c in claims.CLAIMS.values())


def test_stage_resolution():
    assert claims.resolve_stages(["belyi"]) == ["belyi"]
    assert claims.resolve_stages(["dedekind"]) == ["sp62-census", "dedekind"]
    assert claims.resolve_stages(["nielsen", "perm-triple"]) == ["perm-triple", "sp62-census", "nielsen"]
    assert claims.resolve_stages(["all"]) == list(claims.STAGES)
    with pytest.raises(KeyError):
        claims.resolve_stages(["nope"])


def test_usage_errors():
    assert main([]) == 2
    assert main(["verify", "--stage", "nope"]) == 2
    assert main(["verify", "--samples-per-prime", "0"]) == 2
    assert main(["verify", "--a0", "x/y"]) == 2


def test_verify_belyi_only(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["verify", "--stage", "belyi", "--report", str(out)]) == 0
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["stages_run"] == ["belyi"]
    assert [s["name"] for s in report["stages"]] == ["belyi"]
    assert report["overall"] == "verified"
    assert out.read_text(encoding="utf-8").endswith("}\n")
    assert "overall: verified" in capsys.readouterr().out


def test_verify_report_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["verify", "--stage", "perm-triple", "--stage", "belyi", "--quiet"]
    assert main(args + ["--report", str(a)]) == 0
    assert main(args + ["--report", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_corrupted_constants_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    text = default_path().read_text(encoding="utf-8").replace('"degree": 72', '"degree": "seventy-two"')
    bad.write_text(text, encoding="utf-8")
    assert main(["verify", "--constants", str(bad)]) == 2
    err = capsys.readouterr().err
    assert "triple.degree" in err and "line" in err


def test_failed_stage_exit_1_report_written(tmp_path, capsys):
    d = json.loads(default_path().read_text(encoding="utf-8"))
    d["belyi"]["scale"] = "-1/104977"
    bad = tmp_path / "scale.json"
    bad.write_text(json.dumps(d), encoding="utf-8")
    out = tmp_path / "r.json"
    assert main(["verify", "--stage", "belyi", "--constants", str(bad), "--report", str(out)]) == 1
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["overall"] == "failed"
    entry = report["stages"][0]["claims"][0]
    assert entry["status"] == "failed" and "ProfileMismatch" in entry["diagnostic"]


def test_timings_flag(tmp_path):
    out = tmp_path / "r.json"
    assert main(["verify", "--stage", "belyi", "--timings", "--quiet", "--report", str(out)]) == 0
    report = json.loads(out.read_text())
    assert "wall_time" in report["stages"][0]
