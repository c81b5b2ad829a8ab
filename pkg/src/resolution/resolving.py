"""
The resolving 2-cochain ``J_a`` and the abelian/non-abelian dichotomy.

For an abelian spec the pullback of ``Phi_a`` to the squared group is the
coboundary of ``J_a``; for a non-abelian spec the triple invariants of the
pullback survive and no resolution exists.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Any, Dict, List, Optional

import numpy as np

from ..cocycle import (
    Coboundary3,
    Cochain2,
    CocycleSpec,
    PhaseTable,
    RepresentativeCocycle,
    k_is_coboundary,
    k_is_cocycle,
    pair_key,
    pushdown_F3,
)
from ..cocycle.cochains import combine_tables, numerator_dtype
from ..config import config
from ..core import GroupElem, Phase, solve_congruence_system
from ..errors import PreconditionError
from .lift import GroupLift, lift_group, pullback_cochain

logger = logging.getLogger(__name__)

RESTRICTION_ARGUMENT = (
    "Any resolution over a finite abelian cover restricts to the subgroup generated by "
    "chosen preimages of the generators; the alternating triple sums f_rst of the pulled "
    "back cocycle are unchanged by that restriction and vanish on every coboundary, so "
    "a nonzero f_rst rules out a resolution."
)


def _require_abelian(spec: CocycleSpec) -> None:
    if not spec.is_abelian:
        raise PreconditionError("The resolving cochain J_a exists only for abelian specs (all a_rst = 0)")


def correction_coefficient(a_st: int, b_s: int, b_t: int) -> int:
    """Least ``u >= 0`` with ``b_s^2 u = -a_st b_s b_t (mod b_t^2)``; zero when ``b_s = b_t``."""
    if not a_st:
        return 0
    u = solve_congruence_system([[b_s * b_s]], [-a_st * b_s * b_t], [b_t * b_t])
    # b_s^2 and b_t^2 share gcd(b_s, b_t)^2, which always divides b_s b_t
    return u[0]


class ResolvingCochain(Cochain2):
    """
    ``J_a`` on the squared group, for ``x = (x_i)``, ``y = (y_i)`` canonical and
    ``y_i' = y_i mod b_i``::

        sum_l   a_l x_l (y_l - y_l') / b_l^2
      + sum_s<t a_st x_t (y_s - y_s') / (b_s b_t) + u_st x_t y_s / b_t^2
    """

    def __init__(self, spec: CocycleSpec, lift: Optional[GroupLift] = None):
        _require_abelian(spec)
        lift = lift or lift_group(spec.group)
        if lift.base != spec.group:
            raise PreconditionError("Lift and spec have different base groups")
        super().__init__(lift.lifted)
        self.spec = spec
        self.lift = lift
        b = spec.group.moduli
        self.corrections = {
            (s, t): correction_coefficient(a, b[s], b[t]) for (s, t), a in spec.a_ij.items()
        }

    def evaluate(self, *elems: GroupElem) -> Phase:
        self._check_args(elems)
        x, y = elems
        b = self.spec.group.moduli
        total = Fraction(0)
        for l, a in enumerate(self.spec.a_l):
            if a:
                total += Fraction(a * x[l] * (y[l] - y[l] % b[l]), b[l] * b[l])
        for (s, t), a in self.spec.a_ij.items():
            if a:
                total += Fraction(a * x[t] * (y[s] - y[s] % b[s]), b[s] * b[t])
            u = self.corrections[(s, t)]
            if u:
                total += Fraction(u * x[t] * y[s], b[t] * b[t])
        return Phase.from_fraction(total)

    def _tabulate(self, budget: Optional[int]) -> PhaseTable:
        b = self.spec.group.moduli
        den = lcm(*(m * m for m in b))
        terms = 1 + len(self.spec.a_l) + 2 * len(self.spec.a_ij)
        dtype = numerator_dtype(den * max(self.group.moduli) ** 3 * terms)
        E = self.group.exponent_array().astype(dtype)
        n = self.group.order
        X = E[:, None, :]
        Y = E[None, :, :]
        total = np.zeros((n, n), dtype=dtype)
        for l, a in enumerate(self.spec.a_l):
            if a:
                total += (a * (den // (b[l] * b[l]))) * X[..., l] * (Y[..., l] - Y[..., l] % b[l])
                total %= den
        for (s, t), a in self.spec.a_ij.items():
            if a:
                total += (a * (den // (b[s] * b[t]))) * X[..., t] * (Y[..., s] - Y[..., s] % b[s])
                total %= den
            u = self.corrections[(s, t)]
            if u:
                total += (u * (den // (b[t] * b[t]))) * X[..., t] * Y[..., s]
                total %= den
        return PhaseTable(total, den)


def j_eval(spec: CocycleSpec, g: GroupElem, h: GroupElem) -> Phase:
    """``J_a(g, h)`` for elements of the squared group over ``spec.group``."""
    return ResolvingCochain(spec).evaluate(g, h)


@dataclass
class ResolutionReport:
    moduli: List[int]
    lifted_moduli: List[int]
    abelian: bool
    resolved: bool
    counterexample: Optional[List[List[int]]] = None

    def to_json(self) -> Dict[str, Any]:
        data = {
            "moduli": self.moduli,
            "lifted_moduli": self.lifted_moduli,
            "abelian": self.abelian,
            "resolved": self.resolved,
            "witness": "J_a" if self.resolved else None,
        }
        if self.counterexample is not None:
            data["counterexample"] = self.counterexample
        return data


def verify_resolution(
    spec: CocycleSpec,
    j_spec: Optional[CocycleSpec] = None,
    budget: Optional[int] = None,
) -> ResolutionReport:
    """
    Compare ``dJ`` with the pullback of ``Phi_a`` at every triple of the squared group.

    Args:
        spec: Abelian spec whose cocycle is pulled back.
        j_spec: Spec used to build ``J``; defaults to ``spec``.
        budget: Tuple budget for the ``|lifted|^3`` comparison.

    Raises:
        PreconditionError: If a spec is not abelian.
        BudgetExceededError: If the lifted triple count exceeds the budget.
    """
    _require_abelian(spec)
    lift = lift_group(spec.group)
    config.check_budget(lift.lifted.order ** 3, "comparing dJ with the pullback", budget)

    J = ResolvingCochain(j_spec or spec, lift)
    pulled = pullback_cochain(RepresentativeCocycle(spec), lift)
    diff = combine_tables([(1, Coboundary3(J).tabulate(budget)), (-1, pulled.tabulate(budget))])

    report = ResolutionReport(
        list(spec.group.moduli), list(lift.lifted.moduli), abelian=True, resolved=diff.is_zero()
    )
    if not report.resolved:
        idx = np.argwhere(diff.values)[0]
        report.counterexample = [list(lift.lifted.element_at(int(i))) for i in idx]
        logger.info(f"dJ differs from the pullback at {report.counterexample}")
    return report


@dataclass
class ObstructionReport:
    moduli: List[int]
    lifted_moduli: List[int]
    obstructed: bool
    f_rst: Dict[str, Phase] = field(default_factory=dict)
    argument: str = RESTRICTION_ARGUMENT

    def to_json(self) -> Dict[str, Any]:
        return {
            "moduli": self.moduli,
            "lifted_moduli": self.lifted_moduli,
            "abelian": False,
            "obstructed": self.obstructed,
            "f_rst": {k: v.to_json() for k, v in self.f_rst.items()},
            "argument": self.argument,
        }


def obstruction_check(spec: CocycleSpec) -> ObstructionReport:
    """
    Confirm that the pullback of a non-abelian ``Phi_a`` is not a coboundary.

    Only pointwise evaluation is used, so large lifts stay cheap.

    Raises:
        PreconditionError: If the spec is abelian.
    """
    if spec.is_abelian:
        raise PreconditionError("obstruction_check needs a non-abelian spec (some a_rst != 0)")
    lift = lift_group(spec.group)
    f = pushdown_F3(pullback_cochain(RepresentativeCocycle(spec), lift))
    if not k_is_cocycle(f, lift.lifted):
        raise PreconditionError("Pullback does not push down to a K-cocycle")
    obstructed = k_is_coboundary(f, lift.lifted) is None
    logger.info(f"Obstruction for {spec.sequence()} on {list(lift.lifted.moduli)}: {obstructed}")
    return ObstructionReport(
        list(spec.group.moduli),
        list(lift.lifted.moduli),
        obstructed,
        {pair_key(t): v for t, v in f.f_rst.items()},
    )
