import json
import random
from pathlib import Path

import pytest

from combsynth.repository import Repository, load_repository
from combsynth.types import Arrow, Ctor, Inter, OMEGA, Type

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

_CRITERION_RESULTS: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1].removeprefix("test_criterion_")
    number, _, label = name.partition("_")
    outcome = "PASS" if report.passed else "FAIL"
    _CRITERION_RESULTS[int(number)] = (label.replace("_", " "), outcome)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERION_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERION_RESULTS):
        label, outcome = _CRITERION_RESULTS[number]
        terminalreporter.write_line(f"criterion {number:2d}: {outcome}  ({label})")

LAB_5X2 = dict(rows=2, cols=5, walls={(1, 0), (4, 0), (1, 1), (3, 1)}, start=(0, 0))
LAB_3X4 = dict(rows=4, cols=3, walls={(0, 0), (2, 0), (1, 2)}, start=(0, 2))


@pytest.fixture(scope="session")
def lab_5x2() -> Repository:
    return load_repository((DATA_DIR / "labyrinth_5x2.json").read_text())


@pytest.fixture(scope="session")
def lab_3x4() -> Repository:
    return load_repository((DATA_DIR / "labyrinth_3x4.json").read_text())


@pytest.fixture(scope="session")
def lab_5x2_document() -> dict:
    return json.loads((DATA_DIR / "labyrinth_5x2.json").read_text())


@pytest.fixture(scope="session")
def lab_3x4_document() -> dict:
    return json.loads((DATA_DIR / "labyrinth_3x4.json").read_text())


def random_closed_type(
    rng: random.Random, depth: int = 4, names: tuple[str, ...] = ("A", "B", "C")
) -> Type:
    """Random closed type of depth <= ``depth`` over a small alphabet."""
    if depth == 0:
        return rng.choice([Ctor(rng.choice(names)), OMEGA])
    kind = rng.randrange(6)
    if kind <= 1:
        arity = rng.randrange(0, 3)
        return Ctor(
            rng.choice(names),
            tuple(random_closed_type(rng, depth - 1, names) for _ in range(arity)),
        )
    if kind <= 2:
        return Arrow(
            random_closed_type(rng, depth - 1, names),
            random_closed_type(rng, depth - 1, names),
        )
    if kind <= 4:
        return Inter(
            random_closed_type(rng, depth - 1, names),
            random_closed_type(rng, depth - 1, names),
        )
    return OMEGA if rng.random() < 0.3 else Ctor(rng.choice(names))
