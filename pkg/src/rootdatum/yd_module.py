"""Diagonal Yetter-Drinfeld modules attached to a root datum."""

import logging
from dataclasses import dataclass
from functools import cached_property
from math import prod
from typing import Any, Dict, List, Tuple

from ..cocycle import CocycleSpec
from ..core import FinAbGroup, GroupElem, Phase, lattice_echelon, phase_sum
from ..errors import PreconditionError
from ..resolution import GroupLift, ResolvingCochain
from .datum import RootDatum, determine_a
from .diagram import GeneralizedDynkinDiagram, diagram_from_braiding

logger = logging.getLogger(__name__)


def _twisted_action(J: ResolvingCochain, linear, degrees, g: GroupElem, j: int) -> Phase:
    h = degrees[j]
    terms = [linear[k][j].scale(e) for k, e in enumerate(g)]
    return phase_sum(terms + [J(g, h), -J(h, g)])


@dataclass(frozen=True, eq=False)
class YDModuleData:
    """
    Basis ``X_1..X_rank`` of degrees ``h_j`` in the squared group, with the
    projective action ``g > X_j = act(g, j) X_j``.

    ``action[i][j]`` is ``act(g_i, j)``; ``linear[k][j]`` is ``x_kj / m_k``.
    """

    lift: GroupLift
    spec: CocycleSpec
    degrees: Tuple[GroupElem, ...]
    linear: Tuple[Tuple[Phase, ...], ...]
    action: Tuple[Tuple[Phase, ...], ...]

    @property
    def group(self) -> FinAbGroup:
        return self.lift.lifted

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @cached_property
    def resolving(self) -> ResolvingCochain:
        return ResolvingCochain(self.spec, self.lift)

    def act(self, g: GroupElem, j: int) -> Phase:
        """``sum_k g_k x_kj / m_k + J(g, h_j) - J(h_j, g)``."""
        self.group.check(g)
        return _twisted_action(self.resolving, self.linear, self.degrees, g, j)

    def descent_defects(self) -> List[Tuple[int, int, Phase]]:
        """``(i, j, phase)`` wherever ``g_i^{b_i}`` acts nontrivially on ``X_j``."""
        defects = []
        for i, b in enumerate(self.lift.base.moduli):
            exps = [0] * self.group.rank
            exps[i] = b
            g = self.group.element(exps)
            for j in range(self.rank):
                value = self.act(g, j)
                if value:
                    defects.append((i, j, value))
        return defects

    def descends(self) -> bool:
        """True when the module lives over the base group."""
        return not self.descent_defects()

    def to_json(self) -> Dict[str, Any]:
        return {
            "lifted_moduli": list(self.group.moduli),
            "spec": self.spec.to_json(),
            "degrees": [h.to_json() for h in self.degrees],
            "action": [[p.to_json() for p in row] for row in self.action],
            "descends": self.descends(),
        }


def build_yd_module(datum: RootDatum) -> YDModuleData:
    """
    Raises:
        PreconditionError: If the datum forces no cocycle parameters.
    """
    spec = determine_a(datum)
    if spec is None:
        raise PreconditionError("The datum's vanishing congruences fail, so no cocycle parameters exist")
    lift = datum.lift
    lifted = lift.lifted
    m = lifted.moduli
    degrees = tuple(lifted.element(row) for row in datum.S)
    linear = tuple(
        tuple(Phase(datum.X[k][j], m[k]) for j in range(datum.rank)) for k in range(lifted.rank)
    )
    J = ResolvingCochain(spec, lift)
    action = tuple(
        tuple(_twisted_action(J, linear, degrees, lifted.generator(i), j) for j in range(datum.rank))
        for i in range(lifted.rank)
    )
    module = YDModuleData(lift, spec, degrees, linear, action)
    logger.info(f"Built YD module of rank {datum.rank} over {list(m)} with a = {spec.sequence()}")
    return module


def braiding_matrix(module: YDModuleData) -> List[List[Phase]]:
    """``q_ij``: the action of the degree ``h_i`` on ``X_j``."""
    return [[module.act(h, j) for j in range(module.rank)] for h in module.degrees]


def braiding_of_yd(module: YDModuleData) -> GeneralizedDynkinDiagram:
    return diagram_from_braiding(braiding_matrix(module))


@dataclass(frozen=True)
class SupportGroup:
    """Subgroup generated by the degrees, as an echelon basis of its exponent lattice."""

    ambient: FinAbGroup
    generators: Tuple[Tuple[int, ...], ...]
    order: int

    @property
    def index(self) -> int:
        return self.ambient.order // self.order

    @property
    def is_full(self) -> bool:
        return self.order == self.ambient.order

    def to_json(self) -> Dict[str, Any]:
        return {
            "ambient_moduli": list(self.ambient.moduli),
            "generators": [list(g) for g in self.generators],
            "order": self.order,
            "index": self.index,
            "is_full": self.is_full,
        }


def support_group(module: YDModuleData) -> SupportGroup:
    group = module.group
    basis = lattice_echelon([list(h) for h in module.degrees], group.moduli)
    pivots = [row[k] for k, row in enumerate(basis)]
    order = prod(m // d for m, d in zip(group.moduli, pivots))
    # rows whose pivot equals the modulus contribute nothing
    generators = tuple(
        tuple(v % m for v, m in zip(row, group.moduli))
        for k, row in enumerate(basis)
        if row[k] != group.moduli[k]
    )
    return SupportGroup(group, generators, order)
