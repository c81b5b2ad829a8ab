"""Majid-algebra axioms for the group algebra ``kG`` twisted by a 3-cocycle."""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Union

import numpy as np

from ..cocycle import Cochain, CocycleSpec, RepresentativeCocycle, find_cocycle_violation

logger = logging.getLogger(__name__)


@dataclass
class AxiomResult:
    holds: bool
    counterexample: Optional[List[List[int]]] = None
    note: str = ""

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"holds": self.holds, "counterexample": self.counterexample}
        if self.note:
            data["note"] = self.note
        return data


@dataclass
class MajidReport:
    """Per-axiom verdicts, each with the first failing tuple of group-likes."""

    moduli: List[int]
    axioms: Dict[str, AxiomResult] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(result.holds for result in self.axioms.values())

    def to_json(self) -> Dict[str, Any]:
        return {
            "moduli": self.moduli,
            "holds": self.holds,
            "axioms": {name: result.to_json() for name, result in self.axioms.items()},
        }


def _first(group, mask: np.ndarray) -> Optional[List[List[int]]]:
    hits = np.argwhere(mask)
    if not len(hits):
        return None
    return [list(group.element_at(int(i))) for i in hits[0]]


def majid_axiom_check(
    source: Union[CocycleSpec, Cochain],
    budget: Optional[int] = None,
    jobs: Optional[int] = None,
) -> MajidReport:
    """
    Check the Majid-algebra axioms of ``(kG, Phi)`` on all group-like tuples.

    The antipode is ``S(g) = g^{-1}`` with ``alpha = epsilon`` and
    ``beta(g) = -Phi(g, g^{-1}, g)``. On group-likes the first quasi-antipode
    equation is that definition of ``beta``, so only the second one,
    ``Phi(g^{-1}, g, g^{-1}) + Phi(g, g^{-1}, g) = 0``, is checked.

    Raises:
        BudgetExceededError: If ``|G|^4`` exceeds the budget.
    """
    phi = RepresentativeCocycle(source) if isinstance(source, CocycleSpec) else source
    group = phi.group
    M = group.mul_table()
    inv = group.inverse_table()
    report = MajidReport(list(group.moduli))

    # quasi-associativity on group-likes reduces to associativity of G
    assoc = M[M, :] != M[:, M]
    report.axioms["quasi_associativity"] = AxiomResult(not assoc.any(), _first(group, assoc))

    unit = (M[0, :] != np.arange(group.order)) | (M[:, 0] != np.arange(group.order))
    report.axioms["unit"] = AxiomResult(not unit.any(), _first(group, unit))

    violation = find_cocycle_violation(phi, budget, jobs, normalization=False)
    pentagon_ok = violation is None
    report.axioms["pentagon"] = AxiomResult(
        pentagon_ok,
        None if pentagon_ok else [list(e) for e in violation.elements],
    )

    table = phi.tabulate(budget)
    T, den = table.values, table.denominator
    middle = T[:, 0, :] != 0
    report.axioms["unit_normalization"] = AxiomResult(not middle.any(), _first(group, middle))

    antipode = M[np.arange(group.order), inv] != 0
    report.axioms["antipode"] = AxiomResult(not antipode.any(), _first(group, antipode))

    r = np.arange(group.order)
    beta = -T[r, inv, r]
    bad = (T[inv, r, inv] - beta) % den != 0
    report.axioms["quasi_antipode"] = AxiomResult(
        not bad.any(),
        _first(group, bad),
        "alpha = epsilon, beta(g) = -Phi(g, g^-1, g)",
    )

    logger.info(f"Majid axioms on {report.moduli}: {report.holds}")
    return report
