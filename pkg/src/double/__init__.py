"""Twisted quantum doubles and the Majid axioms of ``(kG, Phi)``."""

from .twisted_double import (
    DoubleElem,
    conjugate,
    double_multiply,
    find_associativity_violation,
    gamma,
    is_abelian_bruteforce,
    is_abelian_spec,
    is_double_associative,
    theta,
    theta_table,
)
from .majid import AxiomResult, MajidReport, majid_axiom_check

__all__ = [
    "DoubleElem",
    "conjugate",
    "double_multiply",
    "find_associativity_violation",
    "gamma",
    "is_abelian_bruteforce",
    "is_abelian_spec",
    "is_double_associative",
    "theta",
    "theta_table",
    "AxiomResult",
    "MajidReport",
    "majid_axiom_check",
]
