from fractions import Fraction

import pytest

from filbert import _bareiss_py

try:
    from filbert import _bareiss_core
except ImportError:  # extension not built
    _bareiss_core = None

KERNELS = [pytest.param(_bareiss_py, id="python")]
if _bareiss_core is not None:
    KERNELS.append(pytest.param(_bareiss_core, id="cython"))


@pytest.fixture(params=KERNELS)
def kernel(request):
    return request.param


def frac_matrix(rows):
    return [[Fraction(v) for v in row] for row in rows]


_ACCEPTANCE: dict[str, tuple[str, str]] = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when != "call":
        return
    cid = marker.kwargs["id"]
    outcome = "PASS" if call.excinfo is None else "FAIL"
    prev = _ACCEPTANCE.get(cid)
    if prev is None or prev[0] == "PASS":
        _ACCEPTANCE[cid] = (outcome, marker.kwargs.get("title", item.name))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_ACCEPTANCE, key=int):
        outcome, title = _ACCEPTANCE[cid]
        terminalreporter.write_line(f"[{outcome}] criterion {cid:>2}: {title}")
