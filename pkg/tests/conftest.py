import pytest

from ckgeo.oracle import build_ball

_ACCEPTANCE: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if hasattr(report, "wasxfail"):
        if report.skipped:
            status = "FAIL (documented deviation; the certified companion test passes)"
        else:
            status = "UNEXPECTED PASS (deviation resolved? revisit the companion test)"
    else:
        status = "PASS" if report.passed else "FAIL"
    _ACCEPTANCE.append((name, status))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("-", "acceptance summary")
    for name, status in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"[acceptance] {name}: {status}")


@pytest.fixture(scope="session")
def ball12():
    """Radius-12 ball of the central extension (shared; ~2.5k states)."""
    return build_ball("ck", 12)


@pytest.fixture(scope="session")
def ball8():
    """Radius-8 ball for the heavier per-element sweeps."""
    return build_ball("ck", 8)
