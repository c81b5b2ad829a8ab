"""Root data of Cartan type over odd cyclic components."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..cocycle import CocycleSpec, index_pairs
from ..core import FinAbGroup, Phase
from ..errors import ConstructionError, InvalidInputError
from ..rootdatum import (
    GeneralizedDynkinDiagram,
    RootDatum,
    RootDatumReport,
    determine_a,
    verify_root_datum,
)
from .standard import genuine_flag

logger = logging.getLogger(__name__)

G2_NOTE = "components of type G_3 in the divisibility condition are read as type G_2"

CartanMatrix = Tuple[Tuple[int, ...], ...]


def validate_cartan_matrix(matrix: Sequence[Sequence[int]]) -> CartanMatrix:
    """
    Raises:
        InvalidInputError: Unless ``c_ii = 2``, ``c_ij <= 0`` and ``c_ij = 0 <=> c_ji = 0``.
    """
    C = tuple(tuple(int(v) for v in row) for row in matrix)
    n = len(C)
    if n == 0 or any(len(row) != n for row in C):
        raise InvalidInputError("Cartan matrix must be square and non-empty")
    for i in range(n):
        if C[i][i] != 2:
            raise InvalidInputError(f"c_{i + 1}{i + 1} = {C[i][i]}, expected 2")
        for j in range(n):
            if i == j:
                continue
            if C[i][j] > 0:
                raise InvalidInputError(f"c_{i + 1}{j + 1} = {C[i][j]} must be <= 0")
            if (C[i][j] == 0) != (C[j][i] == 0):
                raise InvalidInputError(f"c_{i + 1}{j + 1} and c_{j + 1}{i + 1} must vanish together")
    return C


def cartan_components(matrix: Sequence[Sequence[int]]) -> List[List[int]]:
    """Connected components under ``c_ij != 0``, ordered by smallest member."""
    C = validate_cartan_matrix(matrix)
    n = len(C)
    seen = set()
    components = []
    for start in range(n):
        if start in seen:
            continue
        component = []
        stack = [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            component.append(i)
            for j in range(n):
                if j not in seen and C[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        components.append(sorted(component))
    return components


def symmetrizer(matrix: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """
    Minimal positive integers ``d_i`` with ``d_i c_ij = d_j c_ji``, per component.

    Raises:
        ConstructionError: If the matrix is not symmetrizable.
    """
    C = validate_cartan_matrix(matrix)
    d: Dict[int, Fraction] = {}
    for component in cartan_components(C):
        root = component[0]
        d[root] = Fraction(1)
        stack = [root]
        while stack:
            i = stack.pop()
            for j in component:
                if j != i and C[i][j] != 0 and j not in d:
                    d[j] = d[i] * C[i][j] / C[j][i]
                    stack.append(j)
        scale = lcm(*(d[i].denominator for i in component))
        ints = [int(d[i] * scale) for i in component]
        common = gcd(*ints)
        for i, v in zip(component, ints):
            d[i] = Fraction(v // common)

    n = len(C)
    for i, j in index_pairs(n):
        if d[i] * C[i][j] != d[j] * C[j][i]:
            raise ConstructionError(f"Cartan matrix is not symmetrizable at ({i + 1},{j + 1})")
    return tuple(int(d[i]) for i in range(n))


def is_g2_component(matrix: CartanMatrix, component: Sequence[int]) -> bool:
    if len(component) != 2:
        return False
    i, j = component
    return matrix[i][j] * matrix[j][i] == 3


def default_component_orders(matrix: Sequence[Sequence[int]]) -> List[int]:
    """Smallest admissible odd order per component, chained by divisibility."""
    C = validate_cartan_matrix(matrix)
    components = cartan_components(C)
    g2 = [is_g2_component(C, comp) for comp in components]
    orders: List[int] = []
    previous = 1
    for index in range(len(components)):
        avoid_three = any(g2[index:])
        k = 3
        while k % previous or (avoid_three and k % 3 == 0):
            k += 2
        orders.append(k)
        previous = k
    return orders


@dataclass
class CartanInput:
    cartan_matrix: CartanMatrix
    component_orders: Optional[List[int]] = None

    def __post_init__(self):
        self.cartan_matrix = validate_cartan_matrix(self.cartan_matrix)


@dataclass
class CartanResult:
    datum: RootDatum
    report: RootDatumReport
    spec: CocycleSpec
    symmetrizer: Tuple[int, ...]
    components: List[List[int]]
    component_orders: List[int]
    notes: List[str] = field(default_factory=lambda: [G2_NOTE])

    @property
    def genuine(self) -> bool:
        return genuine_flag(self.spec)

    def to_json(self) -> Dict[str, Any]:
        return {
            "datum": self.datum.to_json(),
            "verification": self.report.to_json(),
            "a": self.spec.to_json(),
            "genuine": self.genuine,
            "symmetrizer": list(self.symmetrizer),
            "components": [[i + 1 for i in comp] for comp in self.components],
            "component_orders": self.component_orders,
            "notes": self.notes,
        }


def _check_orders(C: CartanMatrix, components: List[List[int]], orders: List[int]) -> None:
    if len(orders) != len(components):
        raise ConstructionError(
            f"{len(orders)} component orders given for {len(components)} components"
        )
    previous = 1
    for comp, k in zip(components, orders):
        label = "{" + ",".join(str(i + 1) for i in comp) + "}"
        if k <= 2 or k % 2 == 0:
            raise ConstructionError(f"Order {k} of component {label} must be odd and greater than 2")
        if k % previous:
            raise ConstructionError(
                f"Order {k} of component {label} is not divisible by the previous order {previous}"
            )
        if is_g2_component(C, comp) and k % 3 == 0:
            raise ConstructionError(f"Component {label} is of type G_2, so its order {k} must be prime to 3")
        previous = k


def cartan_construction(data: CartanInput) -> CartanResult:
    """
    Build and verify the Cartan-type root datum.

    Vertex ``i`` in a component of order ``b`` gets ``q_ii = d_i / b^2``;
    ``X`` has ``x_ii = d_i``, ``x_ij = d_i c_ij mod b_i^2`` above the diagonal
    and zeros below; ``S = T = I``.

    Raises:
        ConstructionError: On bad component orders, a non-symmetrizable
            matrix, or a datum that fails its own verification.
    """
    C = data.cartan_matrix
    n = len(C)
    components = cartan_components(C)
    orders = data.component_orders or default_component_orders(C)
    _check_orders(C, components, list(orders))
    d = symmetrizer(C)

    b = [0] * n
    for comp, k in zip(components, orders):
        for i in comp:
            b[i] = k
    base = FinAbGroup(tuple(b))
    if not base.is_invariant_factor:
        raise ConstructionError(
            f"Vertex moduli {b} are not in invariant-factor form; order the vertices so that "
            "components with smaller orders come first and occupy contiguous blocks"
        )
    m = [k * k for k in b]

    X = [[0] * n for _ in range(n)]
    for i in range(n):
        X[i][i] = d[i] % m[i]
        for j in range(i + 1, n):
            X[i][j] = (d[i] * C[i][j]) % m[i]
    S = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    diagram = GeneralizedDynkinDiagram(
        tuple(Phase(d[i], m[i]) for i in range(n)),
        {(i, j): Phase(d[i] * C[i][j], m[i]) for i, j in index_pairs(n)},
    )
    datum = RootDatum(base, diagram, S, X)
    report = verify_root_datum(datum)
    if not report.holds:
        raise ConstructionError(f"Cartan datum failed its own verification: {report.failed()}")

    spec = determine_a(datum)
    if any(spec.a_l[i] != d[i] % b[i] for i in range(n)):
        raise ConstructionError(f"Forced a_l {spec.a_l} differ from the symmetrizer {d}")
    logger.info(f"Cartan datum over {b} with d = {d} and a = {spec.sequence()}")
    return CartanResult(datum, report, spec, d, components, list(orders))
