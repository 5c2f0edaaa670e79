import pytest

from noc.verify import run_checks

_ACCEPTANCE = {}


@pytest.fixture(scope="session")
def graph():
    from noc.hierarchy import build_hierarchy

    return build_hierarchy()


@pytest.fixture(scope="session")
def acceptance_report():
    if "report" not in _ACCEPTANCE:
        _ACCEPTANCE["report"] = run_checks()
    return _ACCEPTANCE["report"]


def acceptance_line(row) -> str:
    verdict = "FAIL" if row.status == "fail" else "PASS"
    note = f" [{row.status}]" if row.status not in ("pass", "fail") else ""
    return f"{verdict} {row.id:2d} {row.topic}{note}: {row.detail}"


def pytest_terminal_summary(terminalreporter):
    report = _ACCEPTANCE.get("report")
    if report is None:
        return
    terminalreporter.section("acceptance criteria")
    for row in report.sorted_rows():
        terminalreporter.write_line(acceptance_line(row))
