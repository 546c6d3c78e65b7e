"""Acceptance gate: every criterion at full sample sizes, zero violations.

Run alone with ``pytest tests/test_acceptance.py -s`` to watch progress, or
``python tests/test_acceptance.py``. Each criterion prints one PASS/FAIL
line; the whole gate takes a few minutes on one core.
"""

import sys

import pytest

from autonet.verification import CRITERIA, FULL, run_criterion

pytestmark = pytest.mark.slow


@pytest.mark.parametrize("check", CRITERIA, ids=lambda c: c.__name__.removeprefix("check_").replace("_", "-"))
def test_criterion(check, capsys):
    res = run_criterion(check, FULL)
    with capsys.disabled():
        print("\n" + res.line(), flush=True)
    assert res.passed, "\n".join([res.line()] + res.notes)


if __name__ == "__main__":
    failed = 0
    for check in CRITERIA:
        res = run_criterion(check, FULL)
        print(res.line(), flush=True)
        failed += not res.passed
    sys.exit(1 if failed else 0)
