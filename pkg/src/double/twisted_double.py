"""Structure constants of the twisted quantum double ``D^Phi(G)``."""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

import numpy as np

from ..config import config
from ..core import FinAbGroup, GroupElem, Phase, elem_inverse, elem_mul, phase_sum
from ..cocycle import Cochain, CocycleSpec, PhaseTable
from ..errors import InvalidInputError
from ..utils.parallel import chunked, first_hit, parallel_map

logger = logging.getLogger(__name__)


def conjugate(group: FinAbGroup, g: GroupElem, x: GroupElem) -> GroupElem:
    """``g^x = x^{-1} g x``."""
    return elem_mul(group, elem_inverse(group, x), elem_mul(group, g, x))


def theta(phi: Cochain, g: GroupElem, x: GroupElem, y: GroupElem) -> Phase:
    """``theta_g(x, y) = Phi(g, x, y) + Phi(x, y, g^{xy}) - Phi(x, g^x, y)``."""
    G = phi.group
    xy = elem_mul(G, x, y)
    return phase_sum([
        phi(g, x, y),
        phi(x, y, conjugate(G, g, xy)),
        -phi(x, conjugate(G, g, x), y),
    ])


def gamma(phi: Cochain, g: GroupElem, x: GroupElem, y: GroupElem) -> Phase:
    """``gamma_g(x, y) = Phi(x, y, g) + Phi(g, x^{g^-1}, y^{g^-1}) - Phi(x, g, y^{g^-1})``."""
    G = phi.group
    g_inv = elem_inverse(G, g)
    return phase_sum([
        phi(x, y, g),
        phi(g, conjugate(G, x, g_inv), conjugate(G, y, g_inv)),
        -phi(x, g, conjugate(G, y, g_inv)),
    ])


@dataclass(frozen=True)
class DoubleElem:
    """The basis vector ``e(g) (x) x`` scaled by a root of unity."""

    delta_part: GroupElem
    group_part: GroupElem
    coefficient: Phase = Phase()

    def to_json(self) -> Dict[str, Any]:
        return {
            "delta": self.delta_part.to_json(),
            "x": self.group_part.to_json(),
            "coefficient": self.coefficient.to_json(),
        }


def double_multiply(phi: Cochain, u: DoubleElem, v: DoubleElem) -> Optional[DoubleElem]:
    """
    ``(e(g) x)(e(h) y) = theta_g(x, y) delta_{g^x, h} e(g) xy``.

    Returns:
        The product, or None when it vanishes.
    """
    G = phi.group
    try:
        for e in (u.delta_part, u.group_part, v.delta_part, v.group_part):
            G.check(e)
    except InvalidInputError as e:
        raise InvalidInputError(f"Double elements do not belong to the cochain's group: {e}")
    g, x = u.delta_part, u.group_part
    if conjugate(G, g, x) != v.delta_part:
        return None
    coefficient = phase_sum([u.coefficient, v.coefficient, theta(phi, g, x, v.group_part)])
    return DoubleElem(g, elem_mul(G, x, v.group_part), coefficient)


def _conjugation_table(group: FinAbGroup) -> np.ndarray:
    """``C[g, x]`` is the index of ``x^{-1} g x``."""
    M = group.mul_table()
    inv = group.inverse_table()
    return M[inv[None, :], M]


def theta_table(phi: Cochain, budget: Optional[int] = None) -> PhaseTable:
    """All ``theta_g(x, y)`` as a table indexed ``[g, x, y]``."""
    table = phi.tabulate(budget)
    T = table.values
    group = phi.group
    M = group.mul_table()
    C = _conjugation_table(group)
    r = np.arange(group.order)
    g, x, y = np.ix_(r, r, r)
    values = T[g, x, y] + T[x, y, C[g, M[x, y]]] - T[x, C[g, x], y]
    return PhaseTable(values, table.denominator)


def is_abelian_spec(spec: CocycleSpec) -> bool:
    """Commutativity of ``D^Phi(G)`` read off the parameters: every ``a_rst`` vanishes."""
    return spec.is_abelian


def is_abelian_bruteforce(phi: Cochain, budget: Optional[int] = None) -> bool:
    """True iff ``theta_g(x, y) = theta_g(y, x)`` for all ``g, x, y``."""
    values = theta_table(phi, budget).values
    symmetric = np.array_equal(values, np.swapaxes(values, 1, 2))
    logger.info(f"Brute-force abelianness on {list(phi.group.moduli)}: {symmetric}")
    return symmetric


def find_associativity_violation(
    phi: Cochain,
    budget: Optional[int] = None,
    jobs: Optional[int] = None,
) -> Optional[Tuple[GroupElem, GroupElem, GroupElem, GroupElem]]:
    """
    First ``(g, x, y, z)`` where ``((e(g)x)(e(g^x)y))(e(g^{xy})z)`` and
    ``(e(g)x)((e(g^x)y)(e(g^{xy})z))`` differ.

    Only composable triples contribute; the rest multiply to zero on both sides.
    """
    group = phi.group
    n = group.order
    config.check_budget(n ** 4, "checking associativity of the double", budget)
    theta_values = theta_table(phi, budget)
    Th, den = theta_values.values, theta_values.denominator
    M = group.mul_table()
    C = _conjugation_table(group)

    def scan(rows: range):
        for g in rows:
            Tg = Th[g]
            # theta_g(x,y) + theta_g(xy,z) - theta_{g^x}(y,z) - theta_g(x,yz)
            Tgx = Th[C[g]]
            diff = (Tg[:, :, None] + Tg[M, :] - Tgx - Tg[:, M]) % den
            hits = np.argwhere(diff)
            if len(hits):
                return (g,) + tuple(int(v) for v in hits[0])
        return None

    workers = config.jobs if jobs is None else jobs
    hit = first_hit(parallel_map(scan, chunked(n, max(1, n // (4 * workers))), workers))
    if hit is None:
        return None
    return tuple(group.element_at(i) for i in hit)


def is_double_associative(phi: Cochain, budget: Optional[int] = None, jobs: Optional[int] = None) -> bool:
    return find_associativity_violation(phi, budget, jobs) is None
