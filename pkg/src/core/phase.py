"""Exact roots of unity represented as elements of Q/Z."""

import cmath
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Any, Dict, Iterable, Union


@dataclass(frozen=True, order=True)
class Phase:
    """
    The root of unity ``exp(2*pi*i * numerator / denominator)``.

    Values are kept reduced with ``0 <= numerator < denominator`` and
    ``gcd(numerator, denominator) == 1``; zero is ``0/1``. Python integers are
    unbounded, so no overflow handling is needed.
    """

    numerator: int = 0
    denominator: int = 1

    def __post_init__(self):
        if self.denominator <= 0:
            raise ValueError(f"Phase denominator must be positive, got {self.denominator}")
        num = self.numerator % self.denominator
        g = gcd(num, self.denominator)
        den = self.denominator // g if num else 1
        object.__setattr__(self, "numerator", num // g if num else 0)
        object.__setattr__(self, "denominator", den)

    @classmethod
    def zeta(cls, order: int, exponent: int = 1) -> "Phase":
        """Return ``zeta_order ** exponent`` with ``zeta_t = e^{2 pi i / t}``."""
        return cls(exponent, order)

    @classmethod
    def from_fraction(cls, value: Union[Fraction, int]) -> "Phase":
        value = Fraction(value)
        return cls(value.numerator, value.denominator)

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def order(self) -> int:
        """Multiplicative order of the root of unity."""
        return self.denominator

    @property
    def is_zero(self) -> bool:
        return self.numerator == 0

    def __bool__(self) -> bool:
        return not self.is_zero

    def __add__(self, other: "Phase") -> "Phase":
        if not isinstance(other, Phase):
            return NotImplemented
        den = lcm(self.denominator, other.denominator)
        return Phase(
            self.numerator * (den // self.denominator)
            + other.numerator * (den // other.denominator),
            den,
        )

    def __neg__(self) -> "Phase":
        return Phase(-self.numerator, self.denominator)

    def __sub__(self, other: "Phase") -> "Phase":
        if not isinstance(other, Phase):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k: int) -> "Phase":
        if not isinstance(k, int):
            return NotImplemented
        return Phase(self.numerator * k, self.denominator)

    __rmul__ = __mul__

    def scale(self, k: int) -> "Phase":
        """Return the ``k``-th power of the root of unity; ``k`` may be negative."""
        return self * k

    def numeric(self) -> complex:
        """Complex value for display only; never used in computation."""
        return cmath.exp(2j * cmath.pi * self.numerator / self.denominator)

    def to_json(self) -> Dict[str, int]:
        return {"num": self.numerator, "den": self.denominator}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "Phase":
        return cls(int(data["num"]), int(data["den"]))

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


ZERO = Phase()


def phase_add(p: Phase, q: Phase) -> Phase:
    return p + q


def phase_scale(p: Phase, k: int) -> Phase:
    return p.scale(k)


def phase_order(p: Phase) -> int:
    return p.order


def phase_sum(phases: Iterable[Phase]) -> Phase:
    """Sum phases through one common denominator."""
    total = Fraction(0)
    for p in phases:
        total += Fraction(p.numerator, p.denominator)
    return Phase.from_fraction(total)
