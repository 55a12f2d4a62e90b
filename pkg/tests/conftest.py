import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_criteria = {}   # nodeid -> description
_outcomes = {}   # nodeid -> "PASS" / "FAIL"


def pytest_collection_modifyitems(items):
    for item in items:
        if item.get_closest_marker("criterion"):
            doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
            if hasattr(item, "callspec"):
                doc += f" [{item.callspec.id}]"
            _criteria[item.nodeid] = doc


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion: acceptance criterion")


def pytest_runtest_logreport(report):
    if report.nodeid not in _criteria:
        return
    if report.failed:
        _outcomes[report.nodeid] = "FAIL"
    elif report.when == "call" and report.passed:
        _outcomes.setdefault(report.nodeid, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, doc in _criteria.items():
        if nodeid in _outcomes:
            terminalreporter.write_line(f"{_outcomes[nodeid]}  {doc}")
