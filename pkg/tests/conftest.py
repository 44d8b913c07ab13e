import pytest

from posetbundle.acceptance import standard_groups, standard_posets


@pytest.fixture(scope="session")
def posets():
    return standard_posets()


@pytest.fixture(scope="session")
def groups():
    return standard_groups()


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance") or sys.modules.get(
        "tests.test_acceptance"
    )
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[number].line())
