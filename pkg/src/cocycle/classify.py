"""Coboundary decision and cohomology classification of 3-cocycles."""

import logging
from typing import Dict, Optional

from ..config import config
from ..core import Phase
from ..errors import ClassificationError, PreconditionError
from .cochains import Cochain, RepresentativeCocycle, find_cocycle_violation
from .kcomplex import k_is_coboundary, k_is_cocycle, pushdown_F3, solve_pair
from .spec import (
    CocycleSpec,
    Pair,
    count_specs,
    enumerate_specs,
    index_pairs,
    pair_gcd,
    triple_gcd,
)

logger = logging.getLogger(__name__)


def _require_cocycle(phi: Cochain, exhaustive: bool, budget: Optional[int]) -> None:
    if exhaustive:
        violation = find_cocycle_violation(phi, budget)
        if violation is not None:
            raise PreconditionError(
                f"Cochain is not a normalized 3-cocycle ({violation.kind} fails at "
                f"{[list(e) for e in violation.elements]})"
            )
    elif not k_is_cocycle(pushdown_F3(phi), phi.group):
        raise PreconditionError("Cochain does not push down to a K-cocycle")


def is_coboundary(
    phi: Cochain,
    exhaustive: bool = False,
    budget: Optional[int] = None,
) -> Optional[Dict[Pair, Phase]]:
    """
    Decide whether the 3-cocycle ``phi`` is a coboundary.

    Args:
        phi: A normalized 3-cocycle.
        exhaustive: Confirm the cocycle precondition by brute force first;
            otherwise only its K-level shadow is checked.
        budget: Tuple budget for the exhaustive precondition check.

    Returns:
        The K-level witness ``{(i, j): gamma_ij}`` or None.

    Raises:
        PreconditionError: If ``phi`` is detectably not a cocycle.
    """
    _require_cocycle(phi, exhaustive, budget)
    return k_is_coboundary(pushdown_F3(phi), phi.group)


def _extract_candidate(phi: Cochain) -> Optional[CocycleSpec]:
    """Read the parameters off the pushdown; None when a pair has no admissible residue."""
    group = phi.group
    m = group.moduli
    f = pushdown_F3(phi)

    a_l = tuple(v.numerator * (m[l] // v.denominator) for l, v in enumerate(f.f_rrr))
    a_rst = {}
    for triple, v in f.f_rst.items():
        d = triple_gcd(group, triple)
        a_rst[triple] = v.numerator * (d // v.denominator)

    a_ij = {}
    for i, j in index_pairs(group.rank):
        for c in range(pair_gcd(group, (i, j))):
            shifted = f.f_rrs[(i, j)] - Phase(c, m[j])
            if solve_pair(shifted, f.f_rss[(i, j)], m[i], m[j]) is not None:
                a_ij[(i, j)] = c
                break
        else:
            logger.debug(f"No residue found for pair ({i + 1},{j + 1})")
            return None
    return CocycleSpec(group, a_l, a_ij, a_rst)


def classify(
    phi: Cochain,
    exhaustive: bool = False,
    budget: Optional[int] = None,
    fallback_limit: Optional[int] = None,
) -> CocycleSpec:
    """
    Find the canonical spec ``a`` with ``phi - Phi_a`` a coboundary.

    The candidate read off the pushdown is always verified; if verification
    fails every spec is tried, provided the group has at most
    ``fallback_limit`` classes.

    Raises:
        PreconditionError: If ``phi`` is detectably not a cocycle.
        ClassificationError: If no class is found.
    """
    _require_cocycle(phi, exhaustive, budget)
    group = phi.group

    candidate = _extract_candidate(phi)
    if candidate is not None:
        residual = phi - RepresentativeCocycle(candidate)
        if k_is_coboundary(pushdown_F3(residual), group) is not None:
            logger.info(f"Classified cochain on {list(group.moduli)} as {candidate.sequence()}")
            return candidate
        logger.warning(f"Candidate {candidate.sequence()} failed verification; searching all classes")

    limit = config.classify_fallback_limit if fallback_limit is None else fallback_limit
    total = count_specs(group)
    if total > limit:
        raise ClassificationError(
            f"Pushdown candidate failed and {total} classes exceed the fallback limit {limit}"
        )
    for spec in enumerate_specs(group):
        residual = phi - RepresentativeCocycle(spec)
        if k_is_coboundary(pushdown_F3(residual), group) is not None:
            return spec
    raise ClassificationError(f"No cohomology class matches the cochain on {list(group.moduli)}")
