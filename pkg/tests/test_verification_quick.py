import pytest

from autonet.boolean import counting
from autonet.verification import QUICK, check_counting, criterion_keys, run_criterion, run_suite


def test_quick_suite_passes():
    seen = []
    results = run_suite(QUICK, progress=seen.append)
    assert [r.key for r in results] == criterion_keys() and seen == results
    for r in results:
        assert r.passed, "\n".join([r.line()] + r.notes)


def test_only_filter():
    results = run_suite(QUICK, only={"lifts"})
    assert [r.key for r in results] == ["lifts"]


def test_broken_counter_is_detected(monkeypatch):
    # the criterion must notice a miscount, not just run to completion
    real = counting.enumerate_cube_partitions
    monkeypatch.setattr("autonet.verification.enumerate_cube_partitions", lambda n, **kw: real(n, **kw) + (n == 3))
    r = run_criterion(check_counting, QUICK)
    assert not r.passed and r.violations == 1
    assert any("counted 155" in note for note in r.notes) and r.line().startswith("FAIL counting")


def test_result_needs_cases():
    from autonet.verification import CriterionResult

    assert not CriterionResult("k", "t").passed


@pytest.mark.parametrize("key", criterion_keys())
def test_keys_are_unique_and_kebab(key):
    assert criterion_keys().count(key) == 1 and key == key.lower() and "_" not in key
