"""The fifteen acceptance criteria, one verdict line each.

Criteria 6 and 8 contain claims that are false as printed (see the erratum
rows in ``pbzlab.verify``). They are reported as FAIL and their tests are
strict xfails; the repaired forms of both claims pass as ordinary rows.
"""

import time

import pytest

from pbzlab import verify

ERRATA = {
    6: "Con_BZ of D3 (+) D2 (+) D3 has 5 elements, not |Con_01(D3)| * 2 + 1 = 3",
    8: "the printed D(n) fails in every nontrivial BZ-lattice",
}


@pytest.fixture(scope="module")
def results():
    start = time.perf_counter()
    res = verify.run()
    return res, time.perf_counter() - start


def test_print_verdicts(results, capsys):
    res, secs = results
    status = verify.criteria_status(res)
    with capsys.disabled():
        print()
        for c, ok in status.items():
            note = f"  [erratum: {ERRATA[c]}]" if c in ERRATA and not ok else ""
            print(f"criterion {c:2d}: {'PASS' if ok else 'FAIL'}  {verify.CRITERIA[c]}{note}")
        print(f"{len(res)} rows in {secs:.1f} s")
    assert sorted(status) == list(range(1, 16))


def test_suite_is_fast(results):
    assert results[1] < 60


def test_no_row_crashes(results):
    bad = [(r.id, r.detail) for r in results[0] if r.status in ("error", "xpass")]
    assert not bad


@pytest.mark.parametrize("criterion", range(1, 16))
def test_rows_without_errata_pass(results, criterion):
    rows = [r for r in results[0] if r.criterion == criterion and r.status != "xfail"]
    assert rows
    failed = [(r.id, r.detail) for r in rows if r.status != "pass"]
    assert not failed


@pytest.mark.parametrize("criterion", [
    pytest.param(c, marks=pytest.mark.xfail(c in ERRATA, reason=ERRATA.get(c, ""), strict=True))
    for c in range(1, 16)])
def test_criterion(results, criterion):
    assert verify.criteria_status(results[0])[criterion]
