"""Root data of standard type built from a diagram's label orders."""

import logging
from dataclasses import dataclass
from math import lcm
from typing import Any, Dict, Optional

from ..cocycle import CocycleSpec, index_pairs
from ..core import FinAbGroup
from ..errors import ConstructionError, InvalidInputError
from ..rootdatum import GeneralizedDynkinDiagram, RootDatum, RootDatumReport, determine_a, verify_root_datum
from .numbers import big_upsilon, square_root, squarefree, table_m_value

logger = logging.getLogger(__name__)

SQUAREFREE_REFUSAL = (
    "every label order is squarefree, so no standard Yetter-Drinfeld module "
    "carries a nontrivial cocycle"
)


def genuine_flag(spec: CocycleSpec) -> bool:
    """True iff the cocycle class of ``spec`` is nontrivial."""
    return not spec.canonical().is_zero


@dataclass
class StandardInput:
    diagram: GeneralizedDynkinDiagram
    q_order: Optional[int] = None

    def __post_init__(self):
        for i, label in enumerate(self.diagram.q_ii):
            if not label:
                raise InvalidInputError(f"Vertex label q_{i + 1}{i + 1} must be a nontrivial root of unity")
        if self.q_order is not None and self.q_order < 1:
            raise InvalidInputError(f"q_order must be positive, got {self.q_order}")


@dataclass
class StandardResult:
    """Outcome of the standard construction; ``datum`` is None on refusal."""

    m: Optional[int]
    datum: Optional[RootDatum] = None
    report: Optional[RootDatumReport] = None
    spec: Optional[CocycleSpec] = None
    reason: Optional[str] = None
    q_order: Optional[int] = None
    table_m: Optional[int] = None

    @property
    def refused(self) -> bool:
        return self.datum is None

    @property
    def genuine(self) -> bool:
        return self.spec is not None and genuine_flag(self.spec)

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"refused": self.refused, "m": self.m, "genuine": self.genuine}
        if self.refused:
            data["reason"] = self.reason
            return data
        data.update({
            "datum": self.datum.to_json(),
            "verification": self.report.to_json(),
            "a": self.spec.to_json(),
            "table_comparison": {
                "q_order": self.q_order,
                "table_m": self.table_m,
                "agrees": self.table_m == self.m,
            },
        })
        return data


def label_orders(diagram: GeneralizedDynkinDiagram):
    return [q.order for q in diagram.q_ii] + [q.order for q in diagram.q_tilde.values()]


def standard_construction(data: StandardInput) -> StandardResult:
    """
    Build and verify the standard-type root datum of a diagram.

    ``m`` is the square root of the least common multiple of ``Upsilon`` over
    all label orders; the base group is ``Z_m^rank``, ``X`` carries the labels
    scaled by ``m^2`` on and above the diagonal, and ``S = T = I``.

    Raises:
        ConstructionError: If the datum fails its own verification or forces
            a trivial cocycle.
    """
    diagram = data.diagram
    orders = label_orders(diagram)
    if all(squarefree(k) for k in orders):
        logger.info(f"Standard construction refused: label orders {orders} are squarefree")
        return StandardResult(None, reason=SQUAREFREE_REFUSAL)

    big_m = lcm(*(big_upsilon(k) for k in orders))
    m = square_root(big_m)
    n = diagram.rank
    modulus = m * m

    X = [[0] * n for _ in range(n)]
    for i in range(n):
        X[i][i] = diagram.q_ii[i].numerator * (modulus // diagram.q_ii[i].denominator)
    for i, j in index_pairs(n):
        label = diagram.edge(i, j)
        X[i][j] = label.numerator * (modulus // label.denominator)
    S = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    datum = RootDatum(FinAbGroup((m,) * n), diagram, S, X)
    report = verify_root_datum(datum)
    if not report.holds:
        raise ConstructionError(f"Standard datum failed its own verification: {report.failed()}")
    spec = determine_a(datum)
    if not genuine_flag(spec):
        raise ConstructionError(f"Standard datum over Z_{m} forced a trivial cocycle")

    q_order = data.q_order or diagram.q_ii[0].order
    logger.info(f"Standard datum of rank {n} over Z_{m} with a = {spec.sequence()}")
    return StandardResult(m, datum, report, spec, q_order=q_order, table_m=table_m_value(q_order))
