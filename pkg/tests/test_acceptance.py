"""One test per acceptance criterion; each prints a PASS/FAIL line.

Checks that fail here fail because the stated tolerance is not met by the
formulas as given (see the measured values in the printed lines); their
thresholds are not relaxed.
"""
import pytest

from pvi_rmt.acceptance import CHECKS, run_suite


@pytest.fixture(scope="module")
def suite():
    out = run_suite("fast", seed=42)
    return {key: next(r for r in out if r.name == key or r.name.startswith(key + " "))
            for key, _ in CHECKS}


@pytest.mark.parametrize("key", [name for name, _ in CHECKS])
def test_criterion(suite, key, capsys):
    r = suite[key]
    with capsys.disabled():
        print("\n" + r.line())
    assert r.passed, r.detail
