"""Shared fixtures for the majid-roots test suite."""

import json
from pathlib import Path
from typing import Any, Callable

import pytest
from click.testing import CliRunner

from src.cocycle import CocycleSpec
from src.core import FinAbGroup

SMALL_GROUPS = [(2,), (4,), (9,), (2, 2), (2, 4), (3, 3), (2, 2, 2)]
ACCEPTANCE_GROUPS = SMALL_GROUPS + [(2, 2, 4)]


@pytest.fixture
def z2_cubed() -> FinAbGroup:
    return FinAbGroup((2, 2, 2))


@pytest.fixture
def z2_z4() -> FinAbGroup:
    return FinAbGroup((2, 4))


@pytest.fixture
def nonabelian_z2_cubed(z2_cubed) -> CocycleSpec:
    """The spec with only ``a_123 = 1`` on ``Z_2^3``."""
    return CocycleSpec(z2_cubed, (0, 0, 0), {}, {(0, 1, 2): 1})


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def write_json(tmp_path: Path) -> Callable[[str, Any], str]:
    """Write a JSON document under ``tmp_path`` and return its path."""

    def _write(name: str, data: Any) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    return _write


@pytest.fixture
def read_report(tmp_path: Path) -> Callable[[str], Any]:
    def _read(name: str = "report.json") -> Any:
        return json.loads((tmp_path / name).read_text(encoding="utf-8"))

    return _read


def _phase(num: int, den: int) -> dict:
    return {"num": num, "den": den}


@pytest.fixture
def a2_datum_json() -> dict:
    """Cartan ``A_2`` over ``Z_3 x Z_3``: ``q_ii = 1/9`` and ``q~_12 = 8/9``."""
    return {
        "schema": 1,
        "moduli": [3, 3],
        "diagram": {"q_ii": [_phase(1, 9), _phase(1, 9)], "q_tilde": {"1,2": _phase(8, 9)}},
        "S": [[1, 0], [0, 1]],
        "X": [[1, 8], [0, 1]],
    }
