import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "repo",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
# HYPOTHESIS_PROFILE=explore draws fresh random examples, and more of them
settings.register_profile("explore", deadline=None, max_examples=300, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "repo"))

CRITERIA = {
    1: "theorem agreement, conditions (1)-(8)",
    2: "unique-circuit conditions (1)-(5) agree",
    3: "B.E.S.T. count equals enumeration",
    4: "De Bruijn counts and distinct interlacing pairs",
    5: "2-in 2-out digraphs: >= 2 circuits, all interlaced",
    6: "oracle equivalences",
    7: "structural properties",
    8: "fixture goldens are bit-identical",
}

_results: dict = {}


@pytest.fixture(scope="session")
def acceptance():
    """``acceptance(k, ok, detail)`` records the outcome of criterion ``k``."""

    def record(k, ok, detail=""):
        _results[k] = (bool(ok), detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for k, name in CRITERIA.items():
        ok, detail = _results.get(k, (False, "not run"))
        line = f"criterion {k} [{name}]: {'PASS' if ok else 'FAIL'}"
        terminalreporter.write_line(f"{line} - {detail}" if detail else line)
