"""Root data, their congruences and the attached Yetter-Drinfeld modules."""

from .diagram import (
    GeneralizedDynkinDiagram,
    diagram_from_braiding,
    diagram_from_constants,
    is_cartan_type,
    twist_equivalent,
)
from .datum import (
    CongruenceReport,
    RootDatum,
    check_congruences,
    determine_a,
    product_TS,
    solve_T,
)
from .yd_module import (
    SupportGroup,
    YDModuleData,
    braiding_matrix,
    braiding_of_yd,
    build_yd_module,
    support_group,
)
from .verify import CheckResult, RootDatumReport, verify_root_datum

__all__ = [
    "GeneralizedDynkinDiagram",
    "diagram_from_braiding",
    "diagram_from_constants",
    "is_cartan_type",
    "twist_equivalent",
    "CongruenceReport",
    "RootDatum",
    "check_congruences",
    "determine_a",
    "product_TS",
    "solve_T",
    "SupportGroup",
    "YDModuleData",
    "braiding_matrix",
    "braiding_of_yd",
    "build_yd_module",
    "support_group",
    "CheckResult",
    "RootDatumReport",
    "verify_root_datum",
]
