import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from heckeb2.klbasis import default_cache  # noqa: E402


@pytest.fixture(scope="session")
def cache():
    return default_cache()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.format_line(num))
