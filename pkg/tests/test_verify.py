import pytest

from pbzlab import verify
from pbzlab.guards import DEFAULTS, _parse, guard


def test_row_ids_unique_and_sorted():
    rows = verify.all_rows()
    ids = [r.id for r in rows]
    assert ids == sorted(ids) and len(set(ids)) == len(ids)
    assert {r.criterion for r in rows} == set(range(1, 16))
    assert "cggendist.simple.n2" in ids


def test_filter():
    rows = verify.select(verify.all_rows(), "eqcnd")
    assert rows and all(r.id.startswith("eqcnd.") for r in rows)
    assert verify.select(verify.all_rows(), "nosuch") == []


def test_erratum_rows_report_xfail():
    res = verify.run("eqcnd.d.gdm")
    assert [r.status for r in res] == ["xfail", "xfail"]
    assert verify.criteria_status(res) == {8: False}


def test_crashing_row_is_reported():
    def boom():
        raise RuntimeError("bad")
    r = verify.run_row(verify.Row("x.y", 1, "none", boom))
    assert r.status == "error" and "RuntimeError" in r.detail


def test_random_aols_are_reproducible():
    a = [(m, k) for m, k, _ in verify.random_aols(10)]
    b = [(m, k) for m, k, _ in verify.random_aols(10)]
    assert a == b


def test_guard_parsing(monkeypatch):
    assert _parse("") == {}
    assert _parse("off")["sat"] == float("inf")
    assert _parse("30") == {"con": 30}
    assert _parse("con=5, sub=7") == {"con": 5, "sub": 7}
    with pytest.raises(ValueError):
        _parse("foo=1")
    monkeypatch.delenv("PBZLAB_GUARD", raising=False)
    assert guard("sub") == DEFAULTS["sub"]
    monkeypatch.setenv("PBZLAB_GUARD", "sub=3")
    assert guard("sub") == 3 and guard("sub", 9) == 9
