"""The small resolution ``K``: pushdown of 3-cochains and the cocycle/coboundary criteria."""

import logging
from dataclasses import dataclass
from math import lcm
from typing import Any, Dict, Optional, Tuple

from ..core import FinAbGroup, GroupElem, Phase, phase_sum, solve_congruence_system
from ..errors import PreconditionError
from .cochains import Cochain
from .spec import Pair, Triple, index_pairs, index_triples, pair_key

logger = logging.getLogger(__name__)

# (permutation of (r, s, t), sign)
_PERMUTATIONS = [
    ((0, 1, 2), 1),
    ((0, 2, 1), -1),
    ((1, 0, 2), -1),
    ((1, 2, 0), 1),
    ((2, 0, 1), 1),
    ((2, 1, 0), -1),
]


@dataclass(frozen=True)
class KCochain3:
    """Values of a 3-cochain on the generators ``Psi`` of ``K_3``."""

    f_rrr: Tuple[Phase, ...]
    f_rrs: Dict[Pair, Phase]
    f_rss: Dict[Pair, Phase]
    f_rst: Dict[Triple, Phase]

    @classmethod
    def zero(cls, rank: int) -> "KCochain3":
        zero = Phase()
        return cls(
            (zero,) * rank,
            {p: zero for p in index_pairs(rank)},
            {p: zero for p in index_pairs(rank)},
            {t: zero for t in index_triples(rank)},
        )

    def to_json(self) -> Dict[str, Any]:
        return {
            "f_rrr": [p.to_json() for p in self.f_rrr],
            "f_rrs": {pair_key(k): v.to_json() for k, v in self.f_rrs.items()},
            "f_rss": {pair_key(k): v.to_json() for k, v in self.f_rss.items()},
            "f_rst": {pair_key(k): v.to_json() for k, v in self.f_rst.items()},
        }


def _power(group: FinAbGroup, i: int, k: int) -> GroupElem:
    exps = [0] * group.rank
    exps[i] = k
    return group.element(exps)


def pushdown_F3(phi: Cochain) -> KCochain3:
    """Evaluate ``phi`` on the images of the ``K_3`` generators in the bar resolution."""
    group = phi.group
    m = group.moduli
    g = [group.generator(i) for i in range(group.rank)]

    f_rrr = tuple(
        phase_sum(phi(g[r], _power(group, r, l), g[r]) for l in range(m[r]))
        for r in range(group.rank)
    )

    f_rrs: Dict[Pair, Phase] = {}
    f_rss: Dict[Pair, Phase] = {}
    for r, s in index_pairs(group.rank):
        terms = []
        for l in range(m[r]):
            gl = _power(group, r, l)
            terms += [phi(gl, g[r], g[s]), -phi(gl, g[s], g[r]), phi(g[s], gl, g[r])]
        f_rrs[(r, s)] = phase_sum(terms)

        terms = []
        for l in range(m[s]):
            gl = _power(group, s, l)
            terms += [phi(g[r], gl, g[s]), -phi(gl, g[r], g[s]), phi(gl, g[s], g[r])]
        f_rss[(r, s)] = phase_sum(terms)

    f_rst: Dict[Triple, Phase] = {}
    for triple in index_triples(group.rank):
        gens = [g[i] for i in triple]
        f_rst[triple] = phase_sum(
            phi(*(gens[k] for k in perm)).scale(sign) for perm, sign in _PERMUTATIONS
        )

    return KCochain3(f_rrr, f_rrs, f_rss, f_rst)


def k_is_cocycle(f: KCochain3, group: FinAbGroup) -> bool:
    """Criterion for ``f`` to be a 3-cocycle of ``Hom(K, Q/Z)``."""
    m = group.moduli
    for r, value in enumerate(f.f_rrr):
        if value.scale(m[r]):
            logger.debug(f"f_rrr fails at r={r + 1}: {value}")
            return False
    for r, s in index_pairs(group.rank):
        if f.f_rss[(r, s)].scale(m[r]) + f.f_rrs[(r, s)].scale(m[s]):
            logger.debug(f"Mixed pair condition fails at ({r + 1},{s + 1})")
            return False
    for triple, value in f.f_rst.items():
        if any(value.scale(m[i]) for i in triple):
            logger.debug(f"f_rst fails at {pair_key(triple)}: {value}")
            return False
    return True


def solve_pair(f_iij: Phase, f_ijj: Phase, m_i: int, m_j: int) -> Optional[Phase]:
    """
    Least ``gamma`` with ``m_i * gamma = f_iij`` and ``m_j * gamma = -f_ijj``.

    Denominators are cleared with ``N = lcm(den f_iij, den f_ijj) * m_i * m_j``
    so any solution has the form ``c / N``.
    """
    big = lcm(f_iij.denominator, f_ijj.denominator) * m_i * m_j
    rhs = [
        f_iij.numerator * (big // f_iij.denominator),
        -f_ijj.numerator * (big // f_ijj.denominator),
    ]
    solution = solve_congruence_system([[m_i], [m_j]], rhs, [big, big])
    return None if solution is None else Phase(solution[0], big)


def k_is_coboundary(f: KCochain3, group: FinAbGroup) -> Optional[Dict[Pair, Phase]]:
    """
    Decide whether ``f`` is a coboundary of ``Hom(K, Q/Z)``.

    Returns:
        The witness ``{(i, j): gamma_ij}`` or None when ``f`` is not a coboundary.

    Raises:
        PreconditionError: If ``f`` is not a K-cocycle.
    """
    if not k_is_cocycle(f, group):
        raise PreconditionError("k_is_coboundary needs a K-cocycle")
    if any(f.f_rrr) or any(f.f_rst.values()):
        return None
    m = group.moduli
    witness: Dict[Pair, Phase] = {}
    for i, j in index_pairs(group.rank):
        gamma = solve_pair(f.f_rrs[(i, j)], f.f_rss[(i, j)], m[i], m[j])
        if gamma is None:
            logger.debug(f"No gamma solves the pair ({i + 1},{j + 1})")
            return None
        witness[(i, j)] = gamma
    return witness


def witness_to_json(witness: Optional[Dict[Pair, Phase]]) -> Optional[Dict[str, Any]]:
    if witness is None:
        return None
    return {pair_key(p): v.to_json() for p, v in witness.items()}
