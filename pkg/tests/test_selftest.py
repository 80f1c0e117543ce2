from posmat.selftest import SelftestOutcome, format_table, run_selftest


def test_quick_selftest_passes():
    outcomes = run_selftest(quick=True)
    failed = [(o.name, o.detail) for o in outcomes if not o.passed]
    assert failed == []


def test_errors_become_failures():
    def broken(quick):
        raise RuntimeError("boom")

    (outcome,) = run_selftest(checks=[("broken", broken)])
    assert not outcome.passed
    assert outcome.detail == "RuntimeError: boom"
    table = format_table([outcome, SelftestOutcome("fine", True, "", 0.5)])
    assert table.splitlines()[0].startswith("FAIL  broken")
    assert "PASS" in table.splitlines()[1]
