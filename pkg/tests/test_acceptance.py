"""Acceptance criteria 1-10, one test each.

Every criterion is exact (zero tolerance).  Runtime budgets are pinned
below and asserted next to the result; each test prints its PASS/FAIL line
to the terminal even when output capture is on.
"""
import json

import pytest

from branchkit.checks import run_criterion

BUDGET_SECONDS = {1: 120, 2: 60, 3: 120, 4: 120, 5: 60, 6: 10, 7: 60, 8: 120, 9: 60, 10: 300}
TOLERANCE = 0       # every comparison is an exact integer identity


@pytest.mark.parametrize("number", sorted(BUDGET_SECONDS))
def test_criterion(number, capsys):
    res = run_criterion(number)
    with capsys.disabled():
        print("\n" + res.line())
        if not res.ok:
            print("    counterexample: " + json.dumps(res.counterexample))
    assert res.ok, res.detail
    assert res.seconds < BUDGET_SECONDS[number]
