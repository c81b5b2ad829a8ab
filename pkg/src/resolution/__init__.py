"""Resolving 3-cocycles over the squared group."""

from .lift import GroupLift, PullbackCochain, lift_group, pullback_cochain
from .resolving import (
    ObstructionReport,
    ResolutionReport,
    ResolvingCochain,
    correction_coefficient,
    j_eval,
    obstruction_check,
    verify_resolution,
)

__all__ = [
    "GroupLift",
    "PullbackCochain",
    "lift_group",
    "pullback_cochain",
    "ObstructionReport",
    "ResolutionReport",
    "ResolvingCochain",
    "correction_coefficient",
    "j_eval",
    "obstruction_check",
    "verify_resolution",
]
