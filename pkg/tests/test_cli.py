import json
from importlib import resources

from click.testing import CliRunner

from coxalg.cli import main


def _data(name):
    return str(resources.files("coxalg").joinpath("data", name))


def run(*args):
    return CliRunner().invoke(main, list(args), catch_exceptions=False)


def test_group_analyze_json():
    res = run("--json", "--no-timings", "group", "analyze", _data("g4.grp"))
    assert res.exit_code == 0
    items = {it["id"]: it for it in json.loads(res.output)["items"]}
    assert items["order"]["detail"] == {"order": 24, "commutator_order": 8, "abelianization": [3]}
    assert items["no-reflections-in-commutator"]["status"] == "PASS"
    assert "seconds" not in items["order"]


def test_invariants_uses_file_coordinates():
    res = run("invariants", _data("s3.grp"), "--bound", "2")
    assert res.exit_code == 0
    assert "x1*y1" in res.output


def test_cox_synth_named_case():
    res = run("cox", "synth", "d8-wreath")
    assert res.exit_code == 0
    assert "PASS     generators-match-printed" in res.output


def test_git_semistable(tmp_path):
    w = tmp_path / "w.txt"
    w.write_text("# toy\nu1: 1, 0\nu2: 0, 1\nw: 1, 1\n")
    res = run("--json", "git", "semistable", "--weights", str(w), "--chi", "2,1")
    ids = [it["id"] for it in json.loads(res.output)["items"]]
    assert ids == ["support/u1 u2", "support/u1 w"]


def test_git_smooth_rejects_unknown_case():
    res = CliRunner().invoke(main, ["git", "smooth", "s3"])
    assert res.exit_code == 2 and "d8-wreath" in res.output


def test_case_run_writes_report(tmp_path):
    out = tmp_path / "s3.json"
    res = run("--no-timings", "case", "run", "s3", "--out", str(out))
    assert res.exit_code == 0
    data = json.loads(out.read_text())
    assert data["title"] == "case s3"
    assert all(it["status"] in ("PASS", "INFO") for it in data["items"])


def test_verify_lifting_exit_code_on_resource_limit():
    res = run("--max-seconds", "0.0001", "verify", "lifting", "d8-wreath", "--dmax", "3")
    assert res.exit_code == 2
    assert "RESOURCE" in res.output


def test_cache_dir_is_populated(tmp_path):
    from coxalg.groebner import GB_CACHE

    GB_CACHE.clear()
    try:
        res = run("--cache-dir", str(tmp_path), "verify", "lifting", "s3", "--dmax", "1")
        assert res.exit_code == 0
        assert list(tmp_path.glob("*.json"))
    finally:
        GB_CACHE.disk = None
