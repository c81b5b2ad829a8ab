"""Check-by-check verification of a root datum."""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..cocycle import CocycleSpec
from ..core import IntMatrixMod
from .datum import RootDatum, check_congruences, determine_a, product_TS
from .yd_module import build_yd_module

logger = logging.getLogger(__name__)

BOUND_CONVENTION = "s_jk < m_k (column modulus), x_ij < m_i (row modulus), m_k = b_k^2"


@dataclass
class CheckResult:
    holds: bool
    details: List[Dict[str, Any]] = field(default_factory=list)
    skipped: bool = False

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"holds": self.holds, "details": self.details}
        if self.skipped:
            data["skipped"] = True
        return data


@dataclass
class RootDatumReport:
    checks: Dict[str, CheckResult] = field(default_factory=dict)
    spec: Optional[CocycleSpec] = None

    @property
    def holds(self) -> bool:
        return all(c.holds for c in self.checks.values())

    def failed(self) -> List[str]:
        return [name for name, c in self.checks.items() if not c.holds]

    def to_json(self) -> Dict[str, Any]:
        return {
            "holds": self.holds,
            "checks": {name: c.to_json() for name, c in self.checks.items()},
            "a": self.spec.to_json() if self.spec is not None else None,
            "bound_convention": BOUND_CONVENTION,
        }


def _skipped(reason: str) -> CheckResult:
    return CheckResult(False, [{"reason": reason}], skipped=True)


def verify_root_datum(datum: RootDatum, require_connected: bool = False) -> RootDatumReport:
    """
    Run every root-datum check and collect the verdicts.

    Checks, in order: entry bounds, invariant-factor base, ``T S = I``,
    structure constants against the diagram, vanishing congruences and
    descent of the Yetter-Drinfeld module to the base group. Later checks
    that depend on a failed one are reported as skipped.
    """
    report = RootDatumReport()
    m = datum.lifted_moduli

    bad = IntMatrixMod(datum.S, m, axis="column").bound_violations()
    bad_x = IntMatrixMod(datum.X, m, axis="row").bound_violations()
    report.checks["bounds"] = CheckResult(
        not bad and not bad_x,
        [{"matrix": "S", "i": i + 1, "j": j + 1, "value": v, "modulus": mod} for i, j, v, mod in bad]
        + [{"matrix": "X", "i": i + 1, "j": j + 1, "value": v, "modulus": mod} for i, j, v, mod in bad_x],
    )

    invariant = datum.base_group.is_invariant_factor
    report.checks["invariant_factor"] = CheckResult(
        invariant, [] if invariant else [{"moduli": list(datum.base_group.moduli)}]
    )

    T = datum.solved_T
    if T is None:
        report.checks["inverse"] = CheckResult(False, [{"reason": "S does not generate the squared group"}])
    else:
        TS = product_TS(T, datum.S)
        wrong = [
            {"j": j + 1, "k": k + 1, "value": TS[j][k] % m[k]}
            for j in range(len(TS))
            for k in range(len(m))
            if (TS[j][k] - (1 if j == k else 0)) % m[k]
        ]
        report.checks["inverse"] = CheckResult(not wrong, wrong)

    implied = datum.implied_diagram()
    mismatches = []
    for i in range(datum.rank):
        if implied.q_ii[i] != datum.diagram.q_ii[i]:
            mismatches.append({
                "i": i + 1, "j": i + 1,
                "expected": datum.diagram.q_ii[i].to_json(),
                "computed": implied.q_ii[i].to_json(),
            })
        for j in range(i + 1, datum.rank):
            if implied.edge(i, j) != datum.diagram.edge(i, j):
                mismatches.append({
                    "i": i + 1, "j": j + 1,
                    "expected": datum.diagram.edge(i, j).to_json(),
                    "computed": implied.edge(i, j).to_json(),
                })
    report.checks["structure_constants"] = CheckResult(not mismatches, mismatches)

    if T is None or not invariant:
        report.checks["congruences"] = _skipped("needs T and an invariant-factor base")
        report.checks["descent"] = _skipped("needs T and an invariant-factor base")
    else:
        congruences = check_congruences(datum.X, T, datum.base_group)
        report.checks["congruences"] = CheckResult(
            congruences.holds,
            [{"i": i + 1, "l": l + 1, "value": v} for i, l, v in congruences.failures],
        )
        if congruences.holds:
            report.spec = determine_a(datum)
            module = build_yd_module(datum)
            defects = module.descent_defects()
            report.checks["descent"] = CheckResult(
                not defects,
                [{"i": i + 1, "j": j + 1, "phase": p.to_json()} for i, j, p in defects],
            )
        else:
            report.checks["descent"] = _skipped("vanishing congruences fail")

    if require_connected:
        connected = datum.diagram.is_connected()
        report.checks["connected"] = CheckResult(connected)

    if report.holds:
        logger.info(f"Root datum of rank {datum.rank} over {list(datum.base_group.moduli)} verified")
    else:
        logger.info(f"Root datum checks failed: {report.failed()}")
    return report
