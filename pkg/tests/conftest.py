import pytest

ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for one acceptance criterion."""
    notes = []
    yield notes
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    ACCEPTANCE[request.node.name] = (ok, "; ".join(notes))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE):
        ok, note = ACCEPTANCE[name]
        line = f"{'PASS' if ok else 'FAIL'}  {name}"
        if note:
            line += f"  [{note}]"
        terminalreporter.write_line(line)
