"""The ten acceptance criteria, one test each.  Each prints a PASS/FAIL line
(run with ``pytest -s`` to see them, or use ``steinerkit selftest``)."""

import pytest

from steinerkit.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA], ids=[c[1].replace(" ", "_") for c in CRITERIA])
def test_criterion(number):
    result = run_criterion(number)
    print(result.line())
    assert result.passed, result.line()
