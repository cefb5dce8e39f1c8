import dataclasses
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from uavsec import load_config  # noqa: E402
from uavsec.fading import MEAN  # noqa: E402

_ACCEPTANCE: list[tuple[str, bool, str]] = []


def record_criterion(name: str, ok: bool, detail: str) -> None:
    _ACCEPTANCE.append((name, ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")


def mean_only(cfg):
    return dataclasses.replace(cfg, fading_g2g=MEAN, fading_a2g=MEAN)


@pytest.fixture(scope="session")
def handover_cfg():
    return load_config("table1_handover")


@pytest.fixture(scope="session")
def relay_cfg():
    return load_config("table1_relay")
