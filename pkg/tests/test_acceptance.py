"""The fourteen acceptance criteria, each run through the same code path as ``cong13 selftest``."""
import json

import pytest

from cong13.selftest import CRITERIA, FAST, run_criterion

SLOW = {6, 9, 10, 11, 13}


def _param(n):
    marks = [pytest.mark.slow] if n in SLOW else []
    return pytest.param(n, marks=marks, id=f"criterion_{n:02d}")


@pytest.mark.parametrize("number", [_param(n) for n in sorted(CRITERIA)])
def test_criterion(number, record_criterion):
    result = run_criterion(number)
    record_criterion(result)
    print(result.line())
    assert result.passed, json.dumps(result.to_json(), indent=2, default=str)[:4000]


def test_fast_suite_excludes_slow_criteria():
    assert not SLOW & set(FAST)
    assert set(FAST) | SLOW == set(CRITERIA)
