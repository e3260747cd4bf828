"""Runs every acceptance criterion and prints one PASS/FAIL line for each."""
import pytest

from cyclotome.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA], ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, capsys):
    result = run_criterion(number)
    with capsys.disabled():
        print(f"\n{result.line()}  ({result.seconds:.1f}s)")
    assert result.passed, result.detail
