import os
import random
from collections import defaultdict

import pytest

from bgs_forge import _kernels

_criteria = defaultdict(list)
_labels = {}


def pytest_collection_modifyitems(config, items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            _labels[mark.args[0]] = mark.args[1]
        if item.get_closest_marker("longrun") and os.environ.get("BGS_FORGE_LONG_RUNS") != "1":
            item.add_marker(pytest.mark.skip(reason="set BGS_FORGE_LONG_RUNS=1 to run"))


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for key, value in report.user_properties:
        if key == "criterion":
            _criteria[value].append((report.nodeid.split("::")[-1], report.outcome))


@pytest.fixture(autouse=True)
def _record_criterion(request):
    mark = request.node.get_closest_marker("criterion")
    if mark:
        request.node.user_properties.append(("criterion", mark.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section(f"acceptance criteria (kernel backend: {_kernels.BACKEND})")
    for number in sorted(_criteria):
        results = _criteria[number]
        ran = [o for _, o in results if o != "skipped"]
        verdict = "PASS" if ran and all(o == "passed" for o in ran) else "FAIL"
        tr.write_line(f"[{verdict}] criterion {number}: {_labels.get(number, '')}")
        for name, outcome in results:
            tr.write_line(f"         {outcome:7s} {name}")


@pytest.fixture
def rng():
    return random.Random(20261015)


@pytest.fixture(params=sorted(_kernels.backends()))
def kernel(request):
    return _kernels.backends()[request.param]
