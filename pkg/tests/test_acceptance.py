"""Acceptance criteria 1-10, run at seed 7 with exact equality throughout."""

from __future__ import annotations

import json
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from operad_calculus import configs as C
from operad_calculus import io
from operad_calculus.operad import Element, seeded_rng
from operad_calculus.selftest import CRITERIA, run_criterion

SEED = 7


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA], ids=[f"criterion-{c[0]}" for c in CRITERIA])
def test_criterion(number, capsys):
    result = run_criterion(number, SEED)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail


def _round_trips() -> int:
    """Dump, parse and dump again for every instance flavor; returns the file count."""
    rng = seeded_rng(SEED, "round trips")
    count = 0
    for cfg in (C.end_a1(), C.end_a2(), C.end_random2(SEED), C.dendriform_d2(), C.hom_a2()):
        basis = tuple(f"b{k}" for k in range(cfg.operad.d))
        text = io.dumps(io.dump_algebra(cfg.pi.pi, basis))
        alg = io.parse_algebra(io.loads(text))
        assert alg.candidate() == cfg.pi.pi
        assert io.dumps(io.dump_algebra(alg.candidate(), alg.basis)) == text
        count += 1
        for n in (1, 2, 3):
            f = cfg.operad.random_element(n, rng)
            f = Element(cfg.operad, n, f.data * Fraction(2, 5), check=False)
            text = io.dumps(io.dump_element(f, basis))
            back = io.parse_element(io.loads(text), alg)
            assert back == f
            assert io.dumps(io.dump_element(back, basis)) == text
            count += 1
        T = cfg.operad.random_element(1, rng)
        text = io.dumps(io.dump_operator(T))
        assert io.dumps(io.dump_operator(io.parse_element(io.loads(text), alg))) == text
        count += 1
    return count


def test_criterion_10_cli_selftest_and_round_trips(capsys):
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "operad_calculus", "selftest", "--seed", str(SEED), "--json"],
        capture_output=True,
        text=True,
        timeout=600,
    )
    elapsed = time.perf_counter() - start
    report = json.loads(proc.stdout)
    files = _round_trips()
    passed = proc.returncode == 0 and elapsed < 300 and report["passed"] and len(report["criteria"]) == 9
    with capsys.disabled():
        status = "PASS" if passed else "FAIL"
        print(f"\n[{status}] criterion 10: CLI selftest --seed {SEED} exit {proc.returncode} in {elapsed:.1f}s, {files} bit-exact round trips")
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert elapsed < 300
    assert [c["number"] for c in report["criteria"]] == list(range(1, 10))
    assert all(c["passed"] for c in report["criteria"])
