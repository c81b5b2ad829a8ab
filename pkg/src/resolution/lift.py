"""The squared-group cover ``G -> base`` and pullback of cochains along it."""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..cocycle import Cochain, Cochain3, PhaseTable
from ..core import FinAbGroup, GroupElem, Phase
from ..errors import InvalidInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroupLift:
    """
    ``lifted = Z_{b_1^2} x ... x Z_{b_n^2}`` over ``base = Z_{b_1} x ... x Z_{b_n}``.

    ``project`` reduces exponents modulo ``b_i``; ``section`` keeps the
    canonical exponents ``0 <= x_i < b_i``.
    """

    base: FinAbGroup
    lifted: FinAbGroup

    def __post_init__(self):
        if self.lifted.moduli != tuple(m * m for m in self.base.moduli):
            raise InvalidInputError(
                f"Lifted moduli {list(self.lifted.moduli)} are not the squares of "
                f"{list(self.base.moduli)}"
            )

    def project(self, elem: GroupElem) -> GroupElem:
        self.lifted.check(elem)
        return self.base.element(elem.exponents)

    def section(self, elem: GroupElem) -> GroupElem:
        self.base.check(elem)
        return GroupElem(elem.exponents)

    def projection_indices(self) -> np.ndarray:
        """Base index of the image of every lifted element, in lifted order."""
        return self.base.indices_of(self.lifted.exponent_array())


def lift_group(base: FinAbGroup) -> GroupLift:
    lifted = FinAbGroup(tuple(m * m for m in base.moduli))
    logger.debug(f"Lifted {list(base.moduli)} to {list(lifted.moduli)}")
    return GroupLift(base, lifted)


class PullbackCochain(Cochain3):
    """``(x, y, z) -> phi(pi x, pi y, pi z)`` on the lifted group."""

    def __init__(self, phi: Cochain, lift: GroupLift):
        if phi.group != lift.base:
            raise InvalidInputError("Cochain and lift have different base groups")
        if phi.arity != 3:
            raise InvalidInputError("Only 3-cochains are pulled back here")
        super().__init__(lift.lifted)
        self.phi = phi
        self.lift = lift

    def evaluate(self, *elems: GroupElem) -> Phase:
        self._check_args(elems)
        return self.phi.evaluate(*(self.lift.project(e) for e in elems))

    def _tabulate(self, budget: Optional[int]) -> PhaseTable:
        table = self.phi.tabulate(budget)
        P = self.lift.projection_indices()
        return PhaseTable(table.values[np.ix_(P, P, P)], table.denominator)


def pullback_cochain(phi: Cochain, lift: GroupLift) -> PullbackCochain:
    return PullbackCochain(phi, lift)
