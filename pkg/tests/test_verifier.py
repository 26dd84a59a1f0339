import json

import pytest

from dl2.cache import cached_character_table, load_table, save_table, resolve_cache_dir
from dl2.characters import character_table
from dl2.cli import main
from dl2.groups import make_group
from dl2.verifier import (
    CaseData,
    check_classical_sweep,
    check_mode_independence,
    run_case,
    run_suite,
)


def _strip_runtimes(d):
    if isinstance(d, dict):
        return {k: _strip_runtimes(v) for k, v in d.items() if k != "runtime_s"}
    if isinstance(d, list):
        return [_strip_runtimes(v) for v in d]
    return d


def test_run_case_small_gl():
    rep = run_case(2, 1, 2, "gl", "mixed")
    assert rep.all_pass()
    ids = {c.check_id for c in rep.checks}
    assert {"group-order", "table-validity", "stability", "dimension-law",
            "degree-census", "sign-formula", "inflation-adjunction"} <= ids
    sl_exc = [c for c in rep.checks if c.check_id == "sl-exceptions"][0]
    assert sl_exc.verdict == "inapplicable"  # GL case


def test_run_case_small_sl():
    rep = run_case(2, 1, 2, "sl", "equal")
    assert rep.all_pass()
    sl_exc = [c for c in rep.checks if c.check_id == "sl-exceptions"][0]
    assert sl_exc.verdict == "pass"
    assert sl_exc.computed["n_split_classes"] >= 1


def test_report_determinism():
    a = _strip_runtimes(run_case(2, 1, 1, "gl", "equal").to_dict())
    b = _strip_runtimes(run_case(2, 1, 1, "gl", "equal").to_dict())
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_r1_case_degenerates_cleanly():
    rep = run_case(2, 1, 1, "sl", "equal")
    assert rep.all_pass()
    adj = [c for c in rep.checks if c.check_id == "inflation-adjunction"][0]
    assert adj.verdict == "inapplicable"  # no lower level to compare against
    stab = [c for c in rep.checks if c.check_id == "stability"][0]
    assert stab.verdict == "pass"  # reduces to the classical table facts


def test_mode_independence():
    c = check_mode_independence(3, 1, 2, "gl")
    assert c.verdict == "pass"
    c = check_mode_independence(2, 1, 3, "sl")
    assert c.verdict == "pass"


def test_classical_sweep_check():
    c = check_classical_sweep(n_max=4, qs=(2, 3, 5))
    assert c.verdict == "pass"
    assert c.computed["failures"] == []


def test_run_suite_subset():
    manifest = [(2, 1, 1, "gl", "mixed"), (2, 1, 1, "gl", "equal")]
    out = run_suite(manifest)
    assert out["all_pass"]
    assert len(out["cases"]) == 2
    assert any(c["check_id"] == "classical-sweep" for c in out["suite_checks"])
    assert any(
        c["check_id"].startswith("mode-independence") for c in out["suite_checks"]
    )


# -- CLI ---------------------------------------------------------------------


def test_cli_classify_torus(tmp_path, capsys):
    out = tmp_path / "thetas.jsonl"
    assert main(["classify-torus", "--p", "2", "--k", "1", "--r", "2",
                 "--mode", "mixed", "--out", str(out)]) == 0
    lines = out.read_text().strip().split("\n")
    assert len(lines) == 12  # |T^F| = q^2 (q^2 - 1)
    rec = json.loads(lines[0])
    assert {"theta", "tau", "regular", "r0", "theta0", "alpha",
            "general_position", "stabilizer"} <= set(rec)


def test_cli_predict(tmp_path):
    out = tmp_path / "pred.jsonl"
    assert main(["predict", "--p", "3", "--k", "1", "--r", "1",
                 "--flavor", "gl", "--mode", "equal", "--out", str(out)]) == 0
    recs = [json.loads(x) for x in out.read_text().strip().split("\n")]
    assert len(recs) == 8
    assert all(r["total_dim"] == -2 for r in recs)  # level 1: always 1 - q
    assert all("paper_clause" in r for r in recs)


def test_cli_verify_and_report(tmp_path):
    rep = tmp_path / "report.json"
    code = main(["verify", "--p", "2", "--k", "1", "--r", "1",
                 "--flavor", "gl", "--mode", "equal", "--report", str(rep)])
    assert code == 0
    d = json.loads(rep.read_text())
    assert d["all_pass"] is True
    case = d["cases"][0]
    assert case["case"] == {"p": 2, "k": 1, "r": 1, "mode": "equal", "flavor": "gl"}
    for c in case["checks"]:
        assert {"check_id", "paper_clause", "computed", "predicted",
                "verdict", "runtime_s"} == set(c)


def test_cli_verify_manifest(tmp_path):
    mf = tmp_path / "suite.txt"
    mf.write_text(
        "# two tiny cases\n"
        "p=2 k=1 r=1 flavor=gl mode=equal\n"
        "p=2 k=1 r=1 flavor=sl mode=mixed\n"
    )
    rep = tmp_path / "report.json"
    assert main(["verify", "--manifest", str(mf), "--report", str(rep)]) == 0
    d = json.loads(rep.read_text())
    assert len(d["cases"]) == 2 and d["all_pass"]


def test_cli_sweep(tmp_path):
    out = tmp_path / "sweep.tsv"
    assert main(["sweep-conjecture", "--n-max", "3", "--q", "2,3",
                 "--out", str(out)]) == 0
    lines = out.read_text().strip().split("\n")
    assert lines[0].startswith("flavor\t")
    assert all(line.endswith("pass") for line in lines[1:])


def test_cli_dump_table(tmp_path):
    out = tmp_path / "tab.json"
    assert main(["dump-table", "--p", "2", "--k", "1", "--r", "1",
                 "--mode", "equal", "--flavor", "gl",
                 "--format", "json", "--out", str(out)]) == 0
    d = json.loads(out.read_text())
    assert d["format"] == "dl2-table/1"
    assert sorted(c["degree"] for c in d["characters"]) == [1, 1, 2]


# -- caches --------------------------------------------------------------------


def test_table_cache_roundtrip(tmp_path):
    tab = character_table(make_group(2, 1, 2, "mixed", "gl"))
    save_table(tab, tmp_path)
    loaded = load_table(2, 1, 2, "mixed", "gl", tmp_path)
    assert loaded is not None
    assert (loaded.coeffs == tab.coeffs).all()
    assert loaded.exponent == tab.exponent
    assert [c.values for c in loaded.chars] == [c.values for c in tab.chars]


def test_cached_character_table(tmp_path):
    t1 = cached_character_table(3, 1, 1, "mixed", "sl", cache_dir=str(tmp_path))
    assert (tmp_path / "table-p3k1r1-mixed-sl.json.gz").exists()
    assert (tmp_path / "group-p3k1r1-mixed-sl.npz").exists()
    t2 = cached_character_table(3, 1, 1, "mixed", "sl", cache_dir=str(tmp_path))
    assert (t1.coeffs == t2.coeffs).all()


def test_cache_rejects_bad_format(tmp_path):
    path = tmp_path / "table-p2k1r1-equal-gl.json.gz"
    import gzip

    with gzip.open(path, "wt") as fh:
        json.dump({"format": "other/9"}, fh)
    assert load_table(2, 1, 1, "equal", "gl", tmp_path) is None


def test_cache_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv("DL2_CACHE_DIR", str(tmp_path / "cachedir"))
    d = resolve_cache_dir(None)
    assert d is not None and d.exists()
    monkeypatch.delenv("DL2_CACHE_DIR")
    assert resolve_cache_dir(None) is None


def test_oversize_case_inapplicable_not_failed():
    rep = run_case(7, 1, 3, "gl", "mixed")
    assert rep.all_pass()
    assert all(c.verdict == "inapplicable" for c in rep.checks)
