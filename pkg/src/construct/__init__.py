"""Generators of genuine root data: standard type and Cartan type."""

from .numbers import big_upsilon, square_root, squarefree, table_m_value, upsilon
from .standard import (
    SQUAREFREE_REFUSAL,
    StandardInput,
    StandardResult,
    genuine_flag,
    label_orders,
    standard_construction,
)
from .cartan import (
    CartanInput,
    CartanResult,
    cartan_components,
    cartan_construction,
    default_component_orders,
    is_g2_component,
    symmetrizer,
    validate_cartan_matrix,
)
from .corpus import CORPUS, CorpusEntry, corpus_names, get_entry, matches_expected, run_entry

__all__ = [
    "big_upsilon",
    "square_root",
    "squarefree",
    "table_m_value",
    "upsilon",
    "SQUAREFREE_REFUSAL",
    "StandardInput",
    "StandardResult",
    "genuine_flag",
    "label_orders",
    "standard_construction",
    "CartanInput",
    "CartanResult",
    "cartan_components",
    "cartan_construction",
    "default_component_orders",
    "is_g2_component",
    "symmetrizer",
    "validate_cartan_matrix",
    "CORPUS",
    "CorpusEntry",
    "corpus_names",
    "get_entry",
    "matches_expected",
    "run_entry",
]
