"""One test per acceptance criterion; each prints a single PASS/FAIL line.

All comparisons are exact (rational arithmetic, tolerance 0) and every random
draw uses the fixed seeds in ``weylgroupoid.acceptance``.
"""
import pytest

from weylgroupoid.acceptance import CRITERIA

TOLERANCE = 0  # exact arithmetic throughout


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    result = CRITERIA[number]()
    with capsys.disabled():
        print("\n" + result.line() + f" [tolerance={TOLERANCE}]")
    assert result.passed, result.detail
