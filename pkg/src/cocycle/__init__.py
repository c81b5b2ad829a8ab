"""Representative 3-cocycles, cochain arithmetic and cohomology classification."""

from .spec import (
    CocycleSpec,
    count_specs,
    enumerate_specs,
    index_pairs,
    index_triples,
    pair_gcd,
    pair_key,
    parse_pair_key,
    phi_eval,
    spec_bounds,
    spec_from_sequence,
    triple_gcd,
    zero_spec,
)
from .cochains import (
    Cochain,
    Cochain2,
    Cochain3,
    CochainSum,
    Coboundary3,
    CocycleViolation,
    PhaseTable,
    PhiTilde,
    RepresentativeCocycle,
    TabulatedCochain,
    differential3,
    find_cocycle_violation,
    is_cocycle,
    is_two_cocycle,
    phi_tilde,
    random_cochain2,
)
from .kcomplex import KCochain3, k_is_coboundary, k_is_cocycle, pushdown_F3, witness_to_json
from .classify import classify, is_coboundary

__all__ = [
    "CocycleSpec",
    "count_specs",
    "enumerate_specs",
    "index_pairs",
    "index_triples",
    "pair_gcd",
    "pair_key",
    "parse_pair_key",
    "phi_eval",
    "spec_bounds",
    "spec_from_sequence",
    "triple_gcd",
    "zero_spec",
    "Cochain",
    "Cochain2",
    "Cochain3",
    "CochainSum",
    "Coboundary3",
    "CocycleViolation",
    "PhaseTable",
    "PhiTilde",
    "RepresentativeCocycle",
    "TabulatedCochain",
    "differential3",
    "find_cocycle_violation",
    "is_cocycle",
    "is_two_cocycle",
    "phi_tilde",
    "random_cochain2",
    "KCochain3",
    "k_is_coboundary",
    "k_is_cocycle",
    "pushdown_F3",
    "witness_to_json",
    "classify",
    "is_coboundary",
]
