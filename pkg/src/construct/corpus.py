"""Curated diagrams and Cartan matrices used by the construction suites."""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple, Union

from ..core import Phase
from ..errors import InvalidInputError
from ..rootdatum import GeneralizedDynkinDiagram
from .cartan import CartanInput, CartanResult, cartan_construction
from .standard import StandardInput, StandardResult, standard_construction

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorpusEntry:
    """
    A named input with the outcome the construction must reproduce.

    ``expected`` holds ``m`` and ``refused`` for standard entries and the
    symmetrizer for Cartan entries.
    """

    name: str
    kind: str
    cartan_matrix: Optional[Tuple[Tuple[int, ...], ...]] = None
    diagram: Optional[GeneralizedDynkinDiagram] = None
    component_orders: Optional[Tuple[int, ...]] = None
    expected: Dict[str, Any] = field(default_factory=dict)
    description: str = ""


def _rank_one(order: int) -> GeneralizedDynkinDiagram:
    return GeneralizedDynkinDiagram((Phase(1, order),))


CORPUS: List[CorpusEntry] = [
    CorpusEntry("rank1-order9", "standard", diagram=_rank_one(9),
                expected={"refused": False, "m": 3},
                description="rank-one stand-in for a q of order 9"),
    CorpusEntry("rank1-order4", "standard", diagram=_rank_one(4),
                expected={"refused": False, "m": 2},
                description="rank-one stand-in for a q of order 4"),
    CorpusEntry("rank1-order2", "standard", diagram=_rank_one(2), expected={"refused": True}),
    CorpusEntry("rank1-order3", "standard", diagram=_rank_one(3), expected={"refused": True}),
    CorpusEntry("rank1-order6", "standard", diagram=_rank_one(6), expected={"refused": True}),
    CorpusEntry("rank1-order30", "standard", diagram=_rank_one(30), expected={"refused": True}),
    CorpusEntry("A2", "cartan", cartan_matrix=((2, -1), (-1, 2)),
                expected={"symmetrizer": (1, 1), "orders": [3]}),
    CorpusEntry("B2", "cartan", cartan_matrix=((2, -2), (-1, 2)),
                expected={"symmetrizer": (1, 2), "orders": [3]}),
    CorpusEntry("A1xA1", "cartan", cartan_matrix=((2, 0), (0, 2)),
                expected={"symmetrizer": (1, 1), "orders": [3, 3]}),
    CorpusEntry("G2", "cartan", cartan_matrix=((2, -3), (-1, 2)),
                expected={"symmetrizer": (1, 3), "orders": [5]}),
]


def corpus_names() -> List[str]:
    return [entry.name for entry in CORPUS]


def get_entry(name: str) -> CorpusEntry:
    for entry in CORPUS:
        if entry.name == name:
            return entry
    raise InvalidInputError(f"Unknown corpus entry {name!r}; known: {', '.join(corpus_names())}")


def run_entry(entry: CorpusEntry) -> Union[CartanResult, StandardResult]:
    if entry.kind == "cartan":
        orders = list(entry.component_orders) if entry.component_orders else None
        return cartan_construction(CartanInput(entry.cartan_matrix, orders))
    return standard_construction(StandardInput(entry.diagram))


def matches_expected(entry: CorpusEntry, result: Union[CartanResult, StandardResult]) -> bool:
    expected = entry.expected
    if entry.kind == "cartan":
        return (
            tuple(result.symmetrizer) == tuple(expected["symmetrizer"])
            and result.component_orders == expected["orders"]
            and result.genuine
        )
    if expected["refused"]:
        return result.refused
    return not result.refused and result.m == expected["m"] and result.genuine
