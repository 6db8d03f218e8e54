from __future__ import annotations

import pytest

from gencox.admissible.catalog import RANK3_REPRESENTATIVES, U13, U15
from gencox.admissible.gamma import build_gamma
from gencox.admissible.shapes import Shape
from gencox.geometry.arrangement import A37, A413, A415, dual_graph

_criteria: dict[int, tuple[str, bool]] = {}


@pytest.fixture(scope="session")
def rank3_gammas():
    return {label: build_gamma(Shape.make(7, chords)) for label, chords in RANK3_REPRESENTATIVES.items()}


@pytest.fixture(scope="session")
def rank4_gammas():
    return {"u13": build_gamma(Shape.make(6, U13)), "u15": build_gamma(Shape.make(6, U15))}


@pytest.fixture(scope="session")
def arrangement_duals():
    return {"A37": dual_graph(A37), "A413": dual_graph(A413), "A415": dual_graph(A415)}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    passed = call.excinfo is None
    _criteria[number] = (title, passed and _criteria.get(number, (title, True))[1])


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, passed = _criteria[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {number:2d}. {title}")
