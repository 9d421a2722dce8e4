"""End-to-end tests of the fusionkit binary (path in $FUSIONKIT_BIN)."""

import json
import os
import shutil
import subprocess
from pathlib import Path

import jsonschema
import pytest

ROOT = Path(__file__).resolve().parents[2]
BIN = os.environ.get("FUSIONKIT_BIN", str(ROOT / "build" / "tools" / "fusionkit"))
SCHEMA = json.loads((ROOT / "docs" / "report.schema.json").read_text())


def run(*args, cwd=None):
    return subprocess.run([BIN, *map(str, args)], capture_output=True, text=True, cwd=cwd, timeout=600)


def run_json(*args):
    r = run(*args, "--format", "json")
    doc = json.loads(r.stdout)
    jsonschema.validate(doc, SCHEMA)
    return r.returncode, doc


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    d = tmp_path_factory.mktemp("groups")
    assert run("family", "sl23", "--emit-group-file", d / "sl23.grp").returncode == 0
    assert run("family", "agl", "--p", 3, "--n", 2, "--emit-group-file", d / "agl32.grp").returncode == 0
    (d / "s3.grp").write_text("# S3\n3\n(1 2 3)\n(1 2)\n")
    (d / "s4.grp").write_text("4\n2 3 4 1\n2 1 3 4\n")
    (d / "bad.grp").write_text("3\n(1 2 3)\n(1 2\n")
    assert run("corpus", "emit", "--dir", d / "corpus").returncode == 0
    return d


def leaves(doc, key=None):
    if isinstance(doc, dict):
        for k, v in doc.items():
            yield from leaves(v, k)
    elif isinstance(doc, list) and any(isinstance(x, dict) for x in doc):
        for x in doc:
            yield from leaves(x, key)
    else:
        yield key, doc


def text_value(v):
    if isinstance(v, str):
        return v
    return json.dumps(v, separators=(",", ":"))


def assert_same_facts(args):
    rc_json, doc = run_json(*args)
    r = run(*args)
    assert r.returncode == rc_json
    lines = {l.strip() for l in r.stdout.splitlines()}
    for key, value in leaves(doc):
        assert f"{key}: {text_value(value)}".strip() in lines, (key, value)


def test_analyze_s3(files):
    rc, doc = run_json("analyze", files / "s3.grp", "-p", 2)
    assert rc == 0
    p2 = doc["primes"][0]
    assert p2["hyperfocal"]["order"] == 1
    assert p2["p_nilpotent"] is True


def test_analyze_sl23_with_certificate(files):
    rc, doc = run_json("analyze", files / "sl23.grp", "-p", 2, "--certificate")
    assert rc == 0
    p2 = doc["primes"][0]
    assert p2["hyperfocal"]["order"] == 8
    assert p2["p_nilpotent"] is False
    cert = p2["certificate"]
    assert len(cert["d"]) == 8
    assert all(cert["checks"].values())


def test_analyze_all_primes(files):
    rc, doc = run_json("analyze", files / "s4.grp")
    assert rc == 0
    assert [p["prime"] for p in doc["primes"]] == [2, 3]
    assert doc["primes"][0]["hyperfocal"]["order"] == 4


def test_analyze_errors(files):
    r = run("analyze", files / "bad.grp")
    assert r.returncode == 2
    assert "line 3" in r.stderr
    assert run("analyze", files / "missing.grp").returncode == 2
    assert run("analyze", files / "s3.grp", "-p", 4).returncode == 4
    assert run("analyze", files / "sl23.grp", "--max-order", 10).returncode == 3
    env_cap = subprocess.run([BIN, "analyze", files / "sl23.grp"], capture_output=True, text=True,
                             env={**os.environ, "FUSIONKIT_MAX_ORDER": "12"})
    assert env_cap.returncode == 3


def test_check_control_sl23_inner_thm2(files):
    rc, doc = run_json("check-control", files / "sl23.grp", "-p", 2, "--inner", "--theorem", "thm2")
    assert rc == 0
    assert doc["theorem_id"] == "thm2-inner"
    assert doc["hypothesis"]["holds"] is False
    assert doc["conclusion"]["holds"] is False
    assert doc["implication_ok"] is True


def test_check_control_agl_h(files):
    gens = [l for l in (files / "agl32.grp").read_text().splitlines()[2:4]]
    rc, doc = run_json("check-control", files / "agl32.grp", "-p", 3, "--subgroup", gens[0], "--subgroup", gens[1])
    assert rc == 0
    assert doc["group_orders"] == {"G": 144, "H": 72, "S": 9, "hyperfocal": 9}
    assert doc["hypothesis"]["holds"] is False
    assert doc["conclusion"]["holds"] is False
    assert "elapsed_ms" not in doc


def test_check_control_conj_aut_automizer_witness(files):
    gens = [l for l in (files / "agl32.grp").read_text().splitlines()[2:4]]
    rc, doc = run_json("check-control", files / "agl32.grp", "-p", 3, "--theorem", "conj-aut",
                       "--subgroup", gens[0], "--subgroup", gens[1])
    assert rc == 0
    w = doc["hypothesis"]["witness"]
    assert (w["reason"], w["aut_g_order"], w["aut_h_order"]) == ("automizer", 16, 8)
    assert len(w["a"]) == 9


def test_check_control_h_equals_g(files):
    for theorem in ("thm1", "thm1-local", "conj-aut"):
        rc, doc = run_json("check-control", files / "s4.grp", "-p", 3, "--theorem", theorem)
        assert rc == 0
        assert doc["hypothesis"]["holds"] and doc["conclusion"]["holds"] and doc["implication_ok"]


def test_check_control_diagnostic_filter(files):
    rc, doc = run_json("check-control", files / "sl23.grp", "-p", 2, "--inner", "--filter", "elementary_abelian",
                       "--timings")
    assert rc == 0
    assert doc["diagnostic"] is True
    assert doc["hypothesis"]["holds"] is True
    assert doc["conclusion"]["holds"] is False
    assert doc["elapsed_ms"] >= 0


def test_check_control_index_subgroup_and_errors(files):
    # H = <element 1> does not contain S
    assert run("check-control", files / "agl32.grp", "-p", 3, "--subgroup", 1).returncode == 5
    assert run("check-control", files / "agl32.grp", "-p", 3, "--subgroup", 100000).returncode == 5
    assert run("check-control", files / "s3.grp", "-p", 5).returncode == 5
    assert run("check-control", files / "s3.grp", "-p", 6).returncode == 4
    assert run("check-control", files / "s3.grp", "-p", 2, "--inner", "--normalizer").returncode == 5
    assert run("check-control", files / "s3.grp", "-p", 2, "--theorem", "thm9").returncode == 5
    assert run("check-control", files / "bad.grp", "-p", 2).returncode == 2


def test_family_agl_validate():
    rc, doc = run_json("family", "agl", "--p", 3, "--n", 2, "--validate")
    assert rc == 0
    assert doc["ok"] and len(doc["claims"]) == 9
    assert (doc["orders"]["G"], doc["orders"]["D_hat"], doc["v_count"]) == (144, 16, 4)
    rc, doc = run_json("family", "agl", "--p", 2, "--n", 3, "--validate")
    assert rc == 0
    assert (doc["orders"]["G"], doc["v_count"], doc["hom_h_min"], doc["hom_h_max"]) == (168, 7, 1, 1)


def test_family_errors():
    assert run("family", "agl", "--p", 2, "--n", 2).returncode == 5
    assert run("family", "agl", "--p", 4, "--n", 3).returncode == 5
    assert run("family", "agl", "--p", 3, "--n", 1).returncode == 5
    assert run("family").returncode == 5


def test_family_sl23_validate():
    rc, doc = run_json("family", "sl23", "--validate")
    assert rc == 0
    assert doc["elementary_abelian_hypothesis"] is True
    assert doc["exponent4_hypothesis"] is False
    assert doc["fusion_equal"] is False
    assert doc["witness_is_i_to_j"] is True
    rc, doc = run_json("family", "sl23")
    assert doc["orders"] == {"G": 24, "S": 8}


def test_text_and_json_same_facts(files):
    assert_same_facts(["analyze", files / "sl23.grp", "--certificate"])
    assert_same_facts(["check-control", files / "sl23.grp", "-p", 2, "--inner"])
    assert_same_facts(["family", "agl", "--p", 3, "--n", 2, "--validate"])
    assert_same_facts(["corpus", "run", "--manifest", files / "corpus" / "manifest.json", "--filter", "s*"])


def test_corpus_run_full_and_deterministic(files):
    manifest = files / "corpus" / "manifest.json"
    rc, doc = run_json("corpus", "run", "--manifest", manifest)
    assert rc == 0
    assert doc["summary"]["ok"] and doc["summary"]["entries"] >= 15
    a = run("corpus", "run", "--manifest", manifest, "--format", "json")
    b = run("corpus", "run", "--manifest", manifest, "--format", "json", "--jobs", 3)
    assert a.stdout == b.stdout


def test_corpus_filter(files):
    rc, doc = run_json("corpus", "run", "--manifest", files / "corpus" / "manifest.json", "--filter", "agl*")
    assert rc == 0
    assert [e["name"] for e in doc["entries"]] == ["agl-3-2", "agl-2-3", "agl-5-2"]


def test_corpus_timings(files):
    rc, doc = run_json("corpus", "run", "--manifest", files / "corpus" / "manifest.json", "--filter", "s3",
                       "--timings")
    assert rc == 0
    assert all("elapsed_ms" in c for c in doc["entries"][0]["checks"])


def test_corrupted_manifest(files, tmp_path):
    shutil.copytree(files / "corpus", tmp_path / "c")
    m = tmp_path / "c" / "manifest.json"
    doc = json.loads(m.read_text())
    s4 = next(e for e in doc["entries"] if e["name"] == "s4")
    next(x for x in s4["expected"] if x["key"] == "hyperfocal_order@2")["value"] = 8
    m.write_text(json.dumps(doc))
    rc, out = run_json("corpus", "run", "--manifest", m, "--filter", "s4")
    assert rc == 1
    entry = out["entries"][0]
    assert entry["ok"] is False
    bad = [c for c in entry["checks"] if not c["ok"]]
    assert [c["name"] for c in bad] == ["expectations"]
    assert "hyperfocal_order@2" in bad[0]["detail"]

    m.write_text("{ not json")
    assert run("corpus", "run", "--manifest", m).returncode == 2
    assert run("corpus", "run", "--manifest", tmp_path / "none.json").returncode == 2


def test_corpus_missing_group_file(files, tmp_path):
    shutil.copytree(files / "corpus", tmp_path / "c")
    (tmp_path / "c" / "a4.grp").unlink()
    rc, doc = run_json("corpus", "run", "--manifest", tmp_path / "c" / "manifest.json", "--filter", "a4")
    assert rc == 1
    assert "error" in doc["entries"][0]


def test_shipped_corpus_matches_builtin(files):
    shipped = ROOT / "corpus"
    fresh = files / "corpus"
    names = sorted(p.name for p in fresh.iterdir())
    assert names == sorted(p.name for p in shipped.iterdir())
    for n in names:
        assert (shipped / n).read_bytes() == (fresh / n).read_bytes(), n
