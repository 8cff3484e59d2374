from pathlib import Path

import pytest

from quivercox.quiver import AlgebraSpec, parse_spec, quiver_from_edges, tensor_quiver

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def load(name: str) -> AlgebraSpec:
    return parse_spec((FIXTURES / f"{name}.quiver").read_text())


def linear_a(m: int) -> AlgebraSpec:
    """1 -> 2 -> ... -> m, hereditary."""
    q = quiver_from_edges(range(1, m + 1), [(f"a{i}", i, i + 1) for i in range(1, m)])
    return AlgebraSpec(1, quiver=q, name=f"A{m}")


def a2_squared() -> AlgebraSpec:
    a2 = load("a2").quiver
    return AlgebraSpec(2, quiver=tensor_quiver(a2, a2), name="A2 x A2")


def all_fixtures() -> dict[str, AlgebraSpec]:
    return {
        "ex01": load("ex01_2rep_infinite"),
        "exam": load("exam_2rep_finite"),
        "A2": load("a2"),
        "A3": load("a3"),
        "D4": load("d4"),
        "single": load("single_vertex"),
        "A2xA2": a2_squared(),
    }


@pytest.fixture(scope="session")
def fixtures():
    return all_fixtures()


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is not None and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in module.RESULTS:
            terminalreporter.write_line(line)
