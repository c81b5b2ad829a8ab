"""Exact arithmetic foundation: phases, finite abelian groups, congruences."""

from .phase import Phase, ZERO, phase_add, phase_scale, phase_order, phase_sum
from .group import (
    FinAbGroup,
    GroupElem,
    GroupIsomorphism,
    elem_mul,
    elem_inverse,
    elem_power,
    invariant_factor_form,
)
from .linalg import IntMatrixMod, lattice_echelon, solve_congruence_system

__all__ = [
    "Phase",
    "ZERO",
    "phase_add",
    "phase_scale",
    "phase_order",
    "phase_sum",
    "FinAbGroup",
    "GroupElem",
    "GroupIsomorphism",
    "elem_mul",
    "elem_inverse",
    "elem_power",
    "invariant_factor_form",
    "IntMatrixMod",
    "lattice_echelon",
    "solve_congruence_system",
]
