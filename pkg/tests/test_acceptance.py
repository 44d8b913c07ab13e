"""The acceptance suite: one test per criterion, each contributing its
pass/fail line to the terminal summary (see conftest.py)."""

import pytest

from posetbundle.acceptance import CRITERIA_COUNT, _CRITERIA, run_criterion

# filled as tests run; printed by the pytest_terminal_summary hook
RESULTS = {}

_IDS = [f"{num:02d}-{name}" for num, name, _ in _CRITERIA]


@pytest.mark.parametrize("number", range(1, CRITERIA_COUNT + 1), ids=_IDS)
def test_criterion(number):
    result = run_criterion(number)
    RESULTS[number] = result
    print(result.line())
    assert result.passed, result.line()
