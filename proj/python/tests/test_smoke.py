import json
import math
import os
import subprocess
from fractions import Fraction

import pytest

import zpalg

CLI = os.environ.get("ZPALG_CLI")


def mobius(n):
    out, m, d = 1, n, 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            out = -out
        d += 1
    return -out if m > 1 else out


def witt_formula(n, k):
    return sum(mobius(d) * n ** (k // d) for d in range(1, k + 1) if k % d == 0) // k


def test_witt_matches_formula_and_hall():
    for k in range(1, 11):
        assert zpalg.witt(2, k) == witt_formula(2, k)
        assert len(zpalg.basic_products(2, k)) == witt_formula(2, k)
    assert zpalg.witt(2, 64) == witt_formula(2, 64)
    assert zpalg.basic_products(2, 2) == ["[x1,x2]"]


def test_homology_pattern_over_f3():
    reports = zpalg.homology(3, deg_x=2, max_weight=5)
    assert [r["total_H"] for r in reports] == [0, 0, 2, 0, 0]
    cycles = zpalg.tau_sigma(3)
    assert cycles["tau"]["cycle"] and cycles["sigma"]["cycle"]
    assert cycles["independent_classes"] == 2


def test_lie_dims_and_inequalities():
    dims = zpalg.lie_dims([2, 1], 3, max_weight=3)
    assert [sum(len(e) for e in w["module"]["components"].values()) for w in dims] == [2, 2, 2]
    rows = zpalg.weight_inequalities(3, K=4)
    assert all(r["homology_bound"] and r["boundary_bound"] for r in rows)
    assert Fraction(rows[0]["dim_L"]) == 2


def test_moore_operations():
    assert zpalg.crt_split(3, 12) == [
        {"dim": 3, "p": 2, "r": 2, "mult": 1},
        {"dim": 3, "p": 3, "r": 1, "mult": 1},
    ]
    power = zpalg.smash_power(2, 2, 2, 1, 3, 2)
    assert sum(e["mult"] for e in power["wedge"]) == 4
    # (t^2 + t)^3
    assert power["poincare"] == {"3": 1, "4": 3, "5": 3, "6": 1}
    hm = zpalg.hilton_milnor(2, 2, 3, 1, 3)
    assert sum(f["count"] * sum(e["mult"] for e in f["wedge"]) for f in hm if f["k1"] + f["k2"] == 3) == 8


def test_certificate_and_analysis():
    cert = zpalg.growth_certificate(2, 2, 5, 2, 2, 7, 14)
    for c in cert["contributions"]:
        assert c["count"] == 2 ** (c["k"] - 1) * witt_formula(2, c["k"])
    assert cert["analysis"]["verdict"] == "exponential"
    rep = zpalg.analyze([2**m for m in range(1, 31)])
    assert math.isclose(rep["tail_inf"], math.log(2))
    assert rep["verdict"] == "exponential"


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        zpalg.crt_split(2, 6)
    with pytest.raises(zpalg.InvalidInput):
        zpalg.homology(4)
    with pytest.raises(zpalg.ResourceLimit):
        zpalg.growth_certificate(2, 2, 5, 2, 2, 7, 1000)


def test_selftest_small_config():
    results = zpalg.selftest("tensor", seeds=20, max_s=2, random_s=3)
    assert results and all(r["ok"] for r in results)


@pytest.mark.skipif(CLI is None, reason="ZPALG_CLI not set")
def test_cli_exit_codes_and_formats():
    def run(*args, env=None):
        return subprocess.run([CLI, *args], capture_output=True, text=True, env=env)

    ok = run("witt", "--n", "2", "--max-k", "6")
    assert ok.returncode == 0
    assert [r["witt"] for r in json.loads(ok.stdout)["rows"]] == [2, 1, 2, 3, 6, 9]
    csv = run("witt", "--n", "2", "--max-k", "3", env={**os.environ, "ZPALG_FORMAT": "csv"})
    assert csv.stdout == "k,witt\n1,2\n2,1\n3,2\n"
    assert run("no-such-command").returncode == 2
    assert run("moore-split", "--n", "2", "--ell", "6").returncode == 2
    assert run("moore-growth", "--j", "7", "--K", "100000").returncode == 3
    assert run("moore-growth", "--j", "7", "--K", "300", "--unsafe-limits").returncode == 0
    bad = run("witt", env={**os.environ, "ZPALG_FORMAT": "xml"})
    assert bad.returncode == 2 and bad.stdout == ""
