import re

_CRITERIA = {
    1: "polynomial product regression",
    2: "loop semiring product regression",
    3: "groupoid nonassociativity witness",
    4: "loop-law sweep over n = 5..25",
    5: "prime/composite dichotomy",
    6: "unit regressions in zn(23)",
    7: "finite enumeration counts",
    8: "nilpotent square regressions",
    9: "Cayley-table fidelity",
    10: "matrix and row-tuple special divisors",
    11: "semifield instance and lattice zero divisor",
    12: "neutrosophic properties",
    13: "property suites",
}

_PATTERN = re.compile(r"test_criterion_(\d+)")
_outcomes = {}


def pytest_runtest_logreport(report):
    m = _PATTERN.search(report.nodeid)
    if m is None:
        return
    num = int(m.group(1))
    if report.failed:
        _outcomes[num] = "FAIL"
    elif report.when == "call" and report.skipped:
        _outcomes.setdefault(num, "SKIP")
    elif report.when == "call":
        _outcomes.setdefault(num, "PASS")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _outcomes:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(_CRITERIA):
        verdict = _outcomes.get(num, "NOT RUN")
        title = _CRITERIA[num]
        terminalreporter.write_line(f"criterion {num:2d}: {verdict:7s} {title}")
