import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record a one-line PASS/FAIL verdict for an acceptance criterion."""

    class Recorder:
        def __init__(self):
            self.label = request.node.name

        def __call__(self, label):
            self.label = label
            return self

    rec = Recorder()
    yield rec
    failed = getattr(request.node, "rep_call", None)
    verdict = "FAIL" if failed is None or failed.failed else "PASS"
    line = f"{verdict}  {rec.label}"
    ACCEPTANCE_LINES.append(line)
    print("\n" + line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
