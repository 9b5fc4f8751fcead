"""Acceptance criteria 1-13.  One PASS/FAIL line per criterion is printed in the terminal summary."""
import json
import os
import subprocess
import sys

import pytest

import acceptance_lib as lib

RESULTS: dict[int, lib.Outcome] = {}


def _run(k):
    out = lib.run_criterion(k, workers=1)
    RESULTS[k] = out
    return out


@pytest.mark.parametrize("k", range(1, 13))
def test_criterion(k):
    out = _run(k)
    assert out.passed, f"criterion {k}: {out.summary}"


def test_criterion_13_determinism():
    artifacts_1 = {}
    for k in lib.CRITERIA:
        out = RESULTS.get(k) or _run(k)
        artifacts_1[str(k)] = out.artifact
    env = dict(os.environ, NUMBA_NUM_THREADS="8")
    here = os.path.dirname(__file__)
    proc = subprocess.run([sys.executable, os.path.join(here, "acceptance_lib.py"), "8"],
                          capture_output=True, text=True, env=env, cwd=here)
    assert proc.returncode == 0, proc.stderr
    artifacts_8 = json.loads(proc.stdout)
    differ = [k for k in artifacts_1 if json.dumps(artifacts_1[k], sort_keys=True)
              != json.dumps(artifacts_8.get(k), sort_keys=True)]
    ok = not differ
    RESULTS[13] = lib.Outcome(13, ok, f"criteria 1-12 certificate JSON identical at workers 1 and 8"
                                      f" (8 numba threads): {ok}" + (f"; differ: {differ}" if differ else ""))
    assert ok, differ
