"""Random permutation groups: CLI output against the sympy oracle."""

import json
import subprocess
import sys
from pathlib import Path

from hypothesis import HealthCheck, given, settings, strategies as st
from sympy.combinatorics import Permutation

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "oracle"))
import corpus_oracle  # noqa: E402
from test_cli import BIN  # noqa: E402


@st.composite
def groups(draw):
    n = draw(st.integers(min_value=3, max_value=6))
    k = draw(st.integers(min_value=1, max_value=3))
    gens = [draw(st.permutations(range(n))) for _ in range(k)]
    return n, gens


def write(tmp_path, n, gens):
    path = tmp_path / "g.grp"
    path.write_text(f"{n}\n" + "".join(" ".join(str(x + 1) for x in g) + "\n" for g in gens))
    return path


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(groups())
def test_analyze_matches_oracle(tmp_path, group):
    n, gens = group
    path = write(tmp_path, n, gens)
    r = subprocess.run([BIN, "analyze", path, "--format", "json"], capture_output=True, text=True, timeout=120)
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    primes = [p["prime"] for p in doc["primes"]]
    order, exp = corpus_oracle.expectations("random", n, [Permutation(g) for g in gens], primes)
    want = dict((k, v) for k, v, _ in exp)
    assert doc["group"]["order"] == order
    for p in doc["primes"]:
        q = p["prime"]
        assert p["sylow"]["order"] == want[f"sylow_order@{q}"]
        assert p["op_residual"]["order"] == want[f"op_order@{q}"]
        assert p["hyperfocal"]["order"] == want[f"hyperfocal_order@{q}"]
        assert p["focal"]["order"] == want[f"focal_order@{q}"]
        assert int(p["p_nilpotent"]) == want[f"p_nilpotent@{q}"]
        assert set(p["hyperfocal"]["members"]) <= set(p["focal"]["members"]) <= set(p["sylow"]["members"])


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(groups(), st.sampled_from(["thm1", "thm1-local", "thm2", "conj-aut"]), st.booleans())
def test_control_implication_on_random_groups(tmp_path, group, theorem, inner):
    n, gens = group
    path = write(tmp_path, n, gens)
    order, _ = corpus_oracle.expectations("random", n, [Permutation(g) for g in gens], [])
    for p in corpus_oracle.factorint(order):
        r = subprocess.run([BIN, "check-control", path, "-p", str(p), "--theorem", theorem,
                            "--inner" if inner else "--normalizer", "--format", "json"],
                           capture_output=True, text=True, timeout=120)
        assert r.returncode == 0, r.stderr + r.stdout
        doc = json.loads(r.stdout)
        assert doc["implication_ok"] is True
        assert doc["group_orders"]["G"] == order
