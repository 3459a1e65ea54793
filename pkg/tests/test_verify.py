from bident.verify import Check, SUITES, run_suite


def test_suite_names():
    assert set(SUITES) == {"lemmas-F", "smooth-oracle", "total-oracle", "critical", "bounds", "parity"}


def test_lemmas_suite_passes():
    checks = run_suite("lemmas-F")
    assert checks and all(c.ok for c in checks)
    assert all(c.cases >= 59 for c in checks)


def test_parity_is_report_only():
    (c,) = run_suite("parity", 30)
    assert isinstance(c, Check) and not c.fatal


def test_small_oracle_suites():
    assert all(c.ok for c in run_suite("smooth-oracle", 12))
    assert all(c.ok for c in run_suite("total-oracle", 8))
    assert all(c.ok for c in run_suite("critical", 6))
