import pytest

from ringlab import kernels
from ringlab.harness import default_corpus


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id, text): acceptance criterion covered by the test")
    config._criteria = {}


@pytest.fixture(params=sorted(kernels.BACKENDS))
def backend(request):
    with kernels.use_backend(request.param):
        yield request.param


@pytest.fixture(scope="session")
def corpus():
    return default_corpus()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    cid, text = mark.args
    table = item.config._criteria
    ok, _ = table.get(cid, (True, text))
    if rep.when == "call" or rep.failed:
        table[cid] = (ok and not rep.failed, text)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    table = config._criteria
    if not table:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(table, key=lambda c: int(c[2:])):
        ok, text = table[cid]
        terminalreporter.write_line(f"{cid:<5} {'PASS' if ok else 'FAIL'}  {text}")
