"""Acceptance gate: every shipped criterion must pass at full strength.

Each criterion is executed through the same entry point the verify
subcommand uses, with fast=False, so the tolerances asserted here are
the ones a user sees.  A few criteria also carry wall-clock budgets.
"""

import subprocess
import sys

import pytest

from stablemult.acceptance import run_criterion

# criterion index -> wall-clock budget in seconds (None = no budget)
BUDGETS = {1: 1.0, 2: 10.0, 6: 60.0, 10: 60.0}


@pytest.fixture(scope="module")
def results():
    cache = {}

    def get(index):
        if index not in cache:
            cache[index] = run_criterion(index, seed=42, fast=False)
        return cache[index]

    return get


@pytest.mark.parametrize("index", range(1, 16))
def test_criterion_passes(results, index):
    r = results(index)
    assert r.passed, f"[{r.index:02d}] {r.name}: {r.detail}"


@pytest.mark.parametrize("index", sorted(BUDGETS))
def test_criterion_runtime(results, index):
    r = results(index)
    assert r.elapsed < BUDGETS[index], (
        f"[{r.index:02d}] {r.name} took {r.elapsed:.1f}s")


def test_verify_cli_byte_identical():
    cmd = [sys.executable, "-m", "stablemult.cli", "verify",
           "--suite", "fast", "--seed", "42"]
    first = subprocess.run(cmd, capture_output=True, check=True)
    second = subprocess.run(cmd, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert b"passed 15/15" in first.stdout
