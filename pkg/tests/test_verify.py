import pytest

from filbert import verify


def test_plan_empty_grid():
    assert verify.plan("all", 0, 0) == [("lemma.identity", 0, 0)]


def test_plan_rejects_negative():
    with pytest.raises(ValueError):
        verify.plan("fib", -1, 2)
    with pytest.raises(ValueError):
        verify.plan("nope", 1, 1)


def test_unknown_corruption():
    with pytest.raises(ValueError):
        verify.run("fib", 1, 1, corrupt="not_a_formula")


def test_report_structure():
    report = verify.run("qseries", 2, 3)
    assert report["passed"]
    names = [c["name"] for c in report["checks"]]
    assert names == sorted(names)
    assert report["total_cells"] == sum(c["cells"] for c in report["checks"])


def test_parallel_report_identical():
    assert verify.run("fib", 3, 4, workers=1) == verify.run("fib", 3, 4, workers=2)


def test_tolerance_is_applied():
    # a zero-width tolerance can only fail the truncated numeric checks
    report = verify.run("fib", 1, 1, tolerance=-1.0)
    failed = {c["name"] for c in report["checks"] if c["failed"]}
    assert failed == {"fib.measure_truncation"}


def test_worker_count(monkeypatch):
    monkeypatch.delenv("FILBERT_THREADS", raising=False)
    assert verify.worker_count() == 1
    monkeypatch.setenv("FILBERT_THREADS", "4")
    assert verify.worker_count() == 4
    monkeypatch.setenv("FILBERT_THREADS", "junk")
    assert verify.worker_count() == 1
