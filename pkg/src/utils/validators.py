"""Strict parsing of JSON inputs and command-line values."""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

from ..cocycle import CocycleSpec, TabulatedCochain, pair_key, parse_pair_key
from ..construct import CartanInput, StandardInput
from ..core import FinAbGroup, GroupElem, Phase
from ..errors import InvalidInputError
from ..rootdatum import GeneralizedDynkinDiagram, RootDatum, diagram_from_constants
from .serialization import SCHEMA_VERSION

logger = logging.getLogger(__name__)

JsonObject = Dict[str, Any]


def validate_positive_integer(value: int, name: str = "value") -> int:
    """
    Validate that a value is a positive integer.

    Args:
        value: Integer value to validate.
        name: Name of the parameter for error messages.

    Returns:
        The value.

    Raises:
        InvalidInputError: If value is not a positive integer.
    """
    if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
        raise InvalidInputError(f"{name} must be a positive integer, got {value!r}")
    return value


def validate_file_path(file_path: Union[str, Path], must_exist: bool = False) -> Path:
    """
    Validate and convert file path to Path object.

    Raises:
        InvalidInputError: If the file must exist and does not.
    """
    path = Path(file_path)
    if must_exist and not path.is_file():
        raise InvalidInputError(f"File does not exist: {file_path}")
    return path


def load_json(file_path: Union[str, Path]) -> Any:
    """
    Read a JSON document.

    Raises:
        InvalidInputError: If the file is missing or not valid JSON.
    """
    path = validate_file_path(file_path, must_exist=True)
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})")


def check_fields(
    data: Any,
    what: str,
    required: Iterable[str],
    optional: Iterable[str] = (),
) -> JsonObject:
    """
    Reject objects with missing or unknown fields and a foreign schema version.

    ``schema`` is always allowed; when present it must equal the supported version.

    Raises:
        InvalidInputError: On any mismatch.
    """
    if not isinstance(data, dict):
        raise InvalidInputError(f"{what} must be a JSON object")
    required = set(required)
    allowed = required | set(optional) | {"schema"}
    unknown = sorted(set(data) - allowed)
    if unknown:
        raise InvalidInputError(f"Unknown field(s) in {what}: {', '.join(unknown)}")
    missing = sorted(required - set(data))
    if missing:
        raise InvalidInputError(f"Missing field(s) in {what}: {', '.join(missing)}")
    if "schema" in data and data["schema"] != SCHEMA_VERSION:
        raise InvalidInputError(
            f"{what} has schema {data['schema']!r}; only schema {SCHEMA_VERSION} is supported"
        )
    return data


def _integer(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInputError(f"{what} must be an integer, got {value!r}")
    return value


def _integer_list(value: Any, what: str) -> List[int]:
    if not isinstance(value, list):
        raise InvalidInputError(f"{what} must be a list of integers")
    return [_integer(v, what) for v in value]


def parse_matrix(value: Any, what: str = "matrix") -> List[List[int]]:
    if not isinstance(value, list) or not value:
        raise InvalidInputError(f"{what} must be a non-empty list of rows")
    return [_integer_list(row, what) for row in value]


def parse_int_list(text: str, what: str = "list") -> List[int]:
    """Parse ``"3,9"`` into ``[3, 9]``."""
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise InvalidInputError(f"{what} must be comma-separated integers, got {text!r}")


def parse_phase(data: Any, what: str = "phase") -> Phase:
    """Parse ``{"num": N, "den": D}``."""
    check_fields(data, what, ("num", "den"))
    num = _integer(data["num"], f"{what}.num")
    den = _integer(data["den"], f"{what}.den")
    if den < 1:
        raise InvalidInputError(f"{what}.den must be positive, got {den}")
    return Phase(num, den)


def parse_group(moduli: Any) -> FinAbGroup:
    return FinAbGroup(tuple(_integer_list(moduli, "moduli")))


def parse_element(text: str, group: FinAbGroup) -> GroupElem:
    """
    Parse an exponent vector such as ``"1,0,2"``.

    Raises:
        InvalidInputError: If the vector has the wrong length or is not canonical.
    """
    exps = parse_int_list(text, "element")
    return group.check(GroupElem(tuple(exps)))


def _keyed(data: Any, size: int, what: str) -> Dict[tuple, Any]:
    if not isinstance(data, dict):
        raise InvalidInputError(f"{what} must be an object keyed by \"i,j\" strings")
    return {parse_pair_key(key, size): value for key, value in data.items()}


def parse_spec(data: Any) -> CocycleSpec:
    """
    Parse ``{"moduli", "a_l", "a_ij", "a_rst"}``; index keys are 1-based.

    Raises:
        InvalidInputError: On unknown fields or out-of-range parameters.
    """
    check_fields(data, "cocycle spec", ("moduli", "a_l"), ("a_ij", "a_rst"))
    group = parse_group(data["moduli"])
    a_ij = {k: _integer(v, "a_ij") for k, v in _keyed(data.get("a_ij", {}), 2, "a_ij").items()}
    a_rst = {k: _integer(v, "a_rst") for k, v in _keyed(data.get("a_rst", {}), 3, "a_rst").items()}
    return CocycleSpec(group, tuple(_integer_list(data["a_l"], "a_l")), a_ij, a_rst)


def parse_table(data: Any) -> TabulatedCochain:
    """
    Parse a tabulated cochain ``{"moduli", "phases", "arity"?}``.

    Raises:
        InvalidInputError: If the phase count is not ``|G|^arity``.
    """
    check_fields(data, "cochain table", ("moduli", "phases"), ("arity",))
    group = parse_group(data["moduli"])
    arity = _integer(data.get("arity", 3), "arity")
    if arity not in (2, 3):
        raise InvalidInputError(f"arity must be 2 or 3, got {arity}")
    phases = data["phases"]
    if not isinstance(phases, list):
        raise InvalidInputError("phases must be a list")
    expected = group.order ** arity
    if len(phases) != expected:
        raise InvalidInputError(f"Expected {expected} phases for |G| = {group.order}, got {len(phases)}")
    parsed = [parse_phase(p, f"phases[{k}]") for k, p in enumerate(phases)]
    return TabulatedCochain.from_phases(group, arity, parsed)


def parse_cochain(data: Any) -> Union[CocycleSpec, TabulatedCochain]:
    """A spec or a tabulated cochain, told apart by the ``phases`` field."""
    if isinstance(data, dict) and "phases" in data:
        return parse_table(data)
    return parse_spec(data)


def parse_diagram(data: Any) -> GeneralizedDynkinDiagram:
    """Parse ``{"q_ii": [...], "q_tilde": {"i,j": phase}}``."""
    check_fields(data, "diagram", ("q_ii",), ("q_tilde",))
    if not isinstance(data["q_ii"], list):
        raise InvalidInputError("q_ii must be a list of phases")
    q_ii = [parse_phase(p, f"q_ii[{k}]") for k, p in enumerate(data["q_ii"])]
    q_tilde = {}
    for key, value in _keyed(data.get("q_tilde", {}), 2, "q_tilde").items():
        q_tilde[key] = parse_phase(value, f"q_tilde[{pair_key(key)}]")
    return diagram_from_constants(q_ii, q_tilde)


def parse_datum(data: Any) -> RootDatum:
    """Parse ``{"moduli", "diagram", "S", "X", "T"?}``."""
    check_fields(data, "root datum", ("moduli", "diagram", "S", "X"), ("T",))
    T: Optional[List[List[int]]] = None
    if "T" in data:
        T = parse_matrix(data["T"], "T")
    return RootDatum(
        parse_group(data["moduli"]),
        parse_diagram(data["diagram"]),
        parse_matrix(data["S"], "S"),
        parse_matrix(data["X"], "X"),
        T,
    )


def parse_cartan(data: Any, orders: Optional[Sequence[int]] = None) -> CartanInput:
    """
    Parse a Cartan matrix given bare or as ``{"matrix", "orders"?}``.

    Orders from the command line win over orders in the file.
    """
    if isinstance(data, list):
        matrix, file_orders = data, None
    else:
        check_fields(data, "Cartan input", ("matrix",), ("orders",))
        matrix = data["matrix"]
        file_orders = _integer_list(data["orders"], "orders") if "orders" in data else None
    chosen = list(orders) if orders else file_orders
    return CartanInput(parse_matrix(matrix, "Cartan matrix"), chosen)


def parse_standard(data: Any, q_order: Optional[int] = None) -> StandardInput:
    return StandardInput(parse_diagram(data), q_order)

