import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.load_profile("default")

CRITERIA = {
    1: "conjugated standard triples satisfy the four quadratic identities",
    2: "involutions: triple construction and diagonalization round trip",
    3: "triple standardization round trip, basis determinant 1",
    4: "nilpotents: completion to a triple and standardization",
    5: "MAD normalization and its declared failures",
    6: "semidirect composition law, tau identity, recognizer round trip",
    7: "derivation decomposition round trip, malformed data rejected",
    8: "worked CLI fixtures reproduced byte-exactly and oracle-checked",
    9: "all suites over F_5 and F_7; p = 2 rejected",
}

_results: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion this test contributes to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    report.criteria = [m.args[0] for m in item.iter_markers("criterion")]


def pytest_runtest_logreport(report):
    crit = getattr(report, "criteria", None)
    if not crit:
        return
    if report.when == "call" or report.failed or report.skipped:
        for n in crit:
            _results.setdefault(n, []).append(report.passed and not report.skipped)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n, text in CRITERIA.items():
        runs = _results.get(n)
        if runs is None:
            status = "NOT RUN"
        else:
            status = "PASS" if all(runs) else "FAIL"
            status += f" ({sum(runs)}/{len(runs)} checks)"
        terminalreporter.write_line(f"criterion {n}: {status} - {text}")
