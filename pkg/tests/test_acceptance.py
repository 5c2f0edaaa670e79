"""One test per acceptance criterion, each printing a PASS or FAIL line.

The checks run once per session (about a minute).  The same lines are
repeated in the terminal summary, and running this file as a script
prints them without pytest.
"""

import pytest

from noc.verify import CHECKS, FAIL, run_checks

from conftest import acceptance_line

IDS = sorted(cid for cid, _, _ in CHECKS)


def test_every_criterion_has_a_check():
    assert IDS == list(range(1, 16))


@pytest.mark.parametrize("cid", IDS)
def test_criterion(cid, acceptance_report):
    row = next(r for r in acceptance_report.rows if r.id == cid)
    print(acceptance_line(row))
    assert row.status != FAIL, row.detail


if __name__ == "__main__":
    report = run_checks(progress=lambda row: print(acceptance_line(row), flush=True))
    raise SystemExit(0 if report.ok else 1)
