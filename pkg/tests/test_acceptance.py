"""Acceptance gate: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines, or use
``legctl verify-paper`` for the same report outside pytest.
"""

import pytest

from legctl import verify


@pytest.mark.parametrize("check", verify.CHECKS, ids=[c.__name__ for c in verify.CHECKS])
def test_criterion(check):
    result = check()
    print(result.line())
    assert result.checked > 0
    assert result.passed, result.line()


def test_summary(capsys):
    results = verify.run_all()
    with capsys.disabled():
        print()
        for r in results:
            print(r.line())
    assert [r.number for r in results] == list(range(1, len(verify.CHECKS) + 1))
    assert all(r.passed for r in results)
