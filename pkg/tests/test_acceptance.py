"""The eight acceptance criteria; each prints one PASS/FAIL line (see with ``pytest -s``)."""
from __future__ import annotations

import pytest

from wahlkit.verify import CHECKS, run_one


@pytest.mark.parametrize("number", [c[0] for c in CHECKS], ids=[f"{c[0]}-{c[1].replace(' ', '_')}" for c in CHECKS])
def test_criterion(number):
    check = run_one(number)
    print(check.line())
    assert check.passed, check.detail


def test_there_are_eight():
    assert [c[0] for c in CHECKS] == list(range(1, 9))
