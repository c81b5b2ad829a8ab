"""
Normalized cochains with exact values in ``Q/Z``.

A cochain can always be evaluated pointwise; ``tabulate`` materializes it as
an integer numpy array over a common denominator, which is what the
exhaustive checks run on. Numerators are ``int64`` while sums of a few table
entries stay below ``2**62``; larger denominators switch to ``object`` arrays
of Python ints.
"""

import itertools
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from math import lcm
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..config import config
from ..core import FinAbGroup, GroupElem, Phase, elem_mul, phase_sum
from ..errors import InvalidInputError
from ..utils.parallel import chunked, first_hit, parallel_map
from .spec import CocycleSpec, phi_eval, triple_gcd

logger = logging.getLogger(__name__)

INT64_SAFE_BOUND = 2 ** 62

# most table entries a vectorized identity adds before reducing
MAX_TABLE_TERMS = 8


def numerator_dtype(bound: int) -> Any:
    """``np.int64`` when every intermediate stays below ``bound``, else ``object``."""
    return np.int64 if bound < INT64_SAFE_BOUND else object


def table_dtype(denominator: int) -> Any:
    return numerator_dtype(denominator * MAX_TABLE_TERMS)


@dataclass(frozen=True, eq=False)
class PhaseTable:
    """Values ``values[idx] / denominator`` indexed by element positions."""

    values: np.ndarray
    denominator: int

    def __post_init__(self):
        if self.denominator < 1:
            raise InvalidInputError(f"Table denominator must be positive, got {self.denominator}")
        dtype = table_dtype(self.denominator)
        values = np.asarray(self.values)
        if values.dtype != dtype:
            values = values.astype(dtype)
        object.__setattr__(self, "values", np.mod(values, self.denominator))

    @property
    def arity(self) -> int:
        return self.values.ndim

    def phase_at(self, index: Tuple[int, ...]) -> Phase:
        return Phase(int(self.values[index]), self.denominator)

    def rescaled(self, denominator: int, dtype: Any = None) -> np.ndarray:
        """Numerators over ``denominator``, which must be a multiple of ours."""
        if denominator % self.denominator:
            raise ValueError(f"{denominator} is not a multiple of {self.denominator}")
        values = self.values.astype(dtype or table_dtype(denominator))
        return values * (denominator // self.denominator)

    def is_zero(self) -> bool:
        return np.count_nonzero(self.values) == 0

    def normalization_violation(self) -> Optional[Tuple[int, ...]]:
        """First index with an identity argument and a nonzero value."""
        mask = np.zeros(self.values.shape, dtype=bool)
        for axis in range(self.arity):
            edge = [slice(None)] * self.arity
            edge[axis] = 0
            mask[tuple(edge)] = True
        hits = np.argwhere(mask & (self.values != 0))
        return tuple(int(v) for v in hits[0]) if len(hits) else None

    def phases(self) -> List[Phase]:
        """All values in row-major (lexicographic) order."""
        return [Phase(int(v), self.denominator) for v in self.values.reshape(-1)]

    @classmethod
    def from_phases(cls, phases: Sequence[Phase], shape: Tuple[int, ...]) -> "PhaseTable":
        den = lcm(*(p.denominator for p in phases)) if phases else 1
        flat = np.array(
            [p.numerator * (den // p.denominator) for p in phases], dtype=table_dtype(den)
        )
        return cls(flat.reshape(shape), den)


def combine_tables(terms: Sequence[Tuple[int, PhaseTable]]) -> PhaseTable:
    """Integer linear combination of tables of the same shape."""
    den = lcm(*(t.denominator for _, t in terms))
    dtype = numerator_dtype(den * (1 + max(abs(c) for c, _ in terms)))
    total = np.zeros(terms[0][1].values.shape, dtype=dtype)
    for coeff, table in terms:
        total = (total + coeff * table.rescaled(den, dtype)) % den
    return PhaseTable(total, den)


class Cochain(ABC):
    """A normalized ``k``-cochain ``G^k -> Q/Z`` on a finite abelian group."""

    arity: int = 3

    def __init__(self, group: FinAbGroup):
        self.group = group
        self._table: Optional[PhaseTable] = None

    @abstractmethod
    def evaluate(self, *elems: GroupElem) -> Phase:
        """Value at canonical elements; raises InvalidInputError otherwise."""

    def __call__(self, *elems: GroupElem) -> Phase:
        return self.evaluate(*elems)

    def tabulate(self, budget: Optional[int] = None) -> PhaseTable:
        """
        All values as a ``PhaseTable`` of shape ``(|G|,) * arity``.

        Raises:
            BudgetExceededError: If ``|G| ** arity`` exceeds the budget.
        """
        config.check_budget(
            self.group.order ** self.arity, f"tabulating a {self.arity}-cochain", budget
        )
        if self._table is None:
            self._table = self._tabulate(budget)
        return self._table

    def _tabulate(self, budget: Optional[int]) -> PhaseTable:
        elems = list(self.group.elements())
        phases = [self.evaluate(*args) for args in itertools.product(elems, repeat=self.arity)]
        return PhaseTable.from_phases(phases, (len(elems),) * self.arity)

    def _check_args(self, elems: Sequence[GroupElem]) -> None:
        if len(elems) != self.arity:
            raise InvalidInputError(f"Expected {self.arity} arguments, got {len(elems)}")
        for e in elems:
            self.group.check(e)

    def __add__(self, other: "Cochain") -> "CochainSum":
        return CochainSum([(1, self), (1, other)])

    def __sub__(self, other: "Cochain") -> "CochainSum":
        return CochainSum([(1, self), (-1, other)])

    def __neg__(self) -> "CochainSum":
        return CochainSum([(-1, self)])

    def __rmul__(self, k: int) -> "CochainSum":
        if not isinstance(k, int):
            return NotImplemented
        return CochainSum([(k, self)])


class Cochain3(Cochain):
    arity = 3


class Cochain2(Cochain):
    arity = 2


class TabulatedCochain(Cochain):
    """A cochain stored as a full value table."""

    def __init__(self, group: FinAbGroup, table: PhaseTable):
        super().__init__(group)
        shape = (group.order,) * table.arity
        if table.values.shape != shape:
            raise InvalidInputError(
                f"Table of shape {table.values.shape} does not fit a group of order {group.order}"
            )
        self.arity = table.arity
        self._table = table

    def evaluate(self, *elems: GroupElem) -> Phase:
        self._check_args(elems)
        return self._table.phase_at(tuple(self.group.index_of(e) for e in elems))

    def _tabulate(self, budget: Optional[int]) -> PhaseTable:
        return self._table

    @classmethod
    def from_phases(cls, group: FinAbGroup, arity: int, phases: Sequence[Phase]) -> "TabulatedCochain":
        """Build from values listed in lexicographic argument order."""
        expected = group.order ** arity
        if len(phases) != expected:
            raise InvalidInputError(f"Expected {expected} values, got {len(phases)}")
        return cls(group, PhaseTable.from_phases(phases, (group.order,) * arity))

    @classmethod
    def of(cls, cochain: Cochain, budget: Optional[int] = None) -> "TabulatedCochain":
        return cls(cochain.group, cochain.tabulate(budget))


class CochainSum(Cochain):
    """Integer linear combination ``sum c_k * cochain_k``."""

    def __init__(self, terms: Sequence[Tuple[int, Cochain]]):
        if not terms:
            raise InvalidInputError("A cochain sum needs at least one term")
        group = terms[0][1].group
        arity = terms[0][1].arity
        for _, cochain in terms:
            if cochain.group != group or cochain.arity != arity:
                raise InvalidInputError("Cochains in a sum must share group and arity")
        super().__init__(group)
        self.arity = arity
        self.terms = list(terms)

    def evaluate(self, *elems: GroupElem) -> Phase:
        self._check_args(elems)
        return phase_sum(cochain.evaluate(*elems).scale(c) for c, cochain in self.terms)

    def _tabulate(self, budget: Optional[int]) -> PhaseTable:
        return combine_tables([(c, cochain.tabulate(budget)) for c, cochain in self.terms])


class RepresentativeCocycle(Cochain3):
    """The explicit normalized 3-cocycle ``Phi_a`` of a ``CocycleSpec``."""

    def __init__(self, spec: CocycleSpec):
        super().__init__(spec.group)
        self.spec = spec

    def evaluate(self, *elems: GroupElem) -> Phase:
        self._check_args(elems)
        return phi_eval(self.spec, *elems)

    def _tabulate(self, budget: Optional[int]) -> PhaseTable:
        group = self.group
        m = group.moduli
        den = lcm(*m)
        terms = 1 + len(self.spec.a_l) + len(self.spec.a_ij) + len(self.spec.a_rst)
        dtype = numerator_dtype(den * max(m) ** 3 * terms)
        E = group.exponent_array().astype(dtype)
        n = group.order

        def first(l):
            return E[:, l][:, None, None]

        def second(l):
            return E[:, l][None, :, None]

        def third(l):
            return E[:, l][None, None, :]

        total = np.zeros((n, n, n), dtype=dtype)
        for l, a in enumerate(self.spec.a_l):
            if a:
                total += (a * (den // m[l])) * first(l) * ((second(l) + third(l)) // m[l])
                total %= den
        for (s, t), a in self.spec.a_ij.items():
            if a:
                total += (a * (den // m[t])) * first(t) * ((second(s) + third(s)) // m[s])
                total %= den
        for (r, s, t), a in self.spec.a_rst.items():
            if a:
                g = triple_gcd(group, (r, s, t))
                total -= (a * (den // g)) * third(r) * second(s) * first(t)
                total %= den
        return PhaseTable(total, den)


class Coboundary3(Cochain3):
    """``dJ(x, y, z) = J(y, z) - J(xy, z) + J(x, yz) - J(x, y)``."""

    def __init__(self, cochain: Cochain):
        if cochain.arity != 2:
            raise InvalidInputError("The coboundary map here takes a 2-cochain")
        super().__init__(cochain.group)
        self.source = cochain

    def evaluate(self, *elems: GroupElem) -> Phase:
        self._check_args(elems)
        x, y, z = elems
        J, G = self.source, self.group
        return phase_sum([
            J.evaluate(y, z),
            -J.evaluate(elem_mul(G, x, y), z),
            J.evaluate(x, elem_mul(G, y, z)),
            -J.evaluate(x, y),
        ])

    def _tabulate(self, budget: Optional[int]) -> PhaseTable:
        table = self.source.tabulate(budget)
        J = table.values
        M = self.group.mul_table()
        values = J[None, :, :] - J[M, :] + J[:, M] - J[:, :, None]
        return PhaseTable(values, table.denominator)


class PhiTilde(Cochain2):
    """``Phi~_g(x, y) = Phi(g, x, y) + Phi(x, y, g) - Phi(x, g, y)``."""

    def __init__(self, phi: Cochain, g: GroupElem):
        if phi.arity != 3:
            raise InvalidInputError("Phi~ is built from a 3-cochain")
        super().__init__(phi.group)
        self.phi = phi
        self.g = phi.group.check(g)

    def evaluate(self, *elems: GroupElem) -> Phase:
        self._check_args(elems)
        x, y = elems
        return phase_sum([
            self.phi.evaluate(self.g, x, y),
            self.phi.evaluate(x, y, self.g),
            -self.phi.evaluate(x, self.g, y),
        ])

    def _tabulate(self, budget: Optional[int]) -> PhaseTable:
        table = self.phi.tabulate(budget)
        T = table.values
        gi = self.group.index_of(self.g)
        return PhaseTable(T[gi, :, :] + T[:, :, gi] - T[:, gi, :], table.denominator)


def differential3(cochain: Cochain) -> Coboundary3:
    return Coboundary3(cochain)


def phi_tilde(phi: Cochain, g: GroupElem) -> PhiTilde:
    return PhiTilde(phi, g)


@dataclass(frozen=True)
class CocycleViolation:
    """A witness that a cochain is not a normalized 3-cocycle."""

    kind: str
    elements: Tuple[GroupElem, ...]
    value: Phase

    def to_json(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "elements": [e.to_json() for e in self.elements],
            "value": self.value.to_json(),
        }


def find_cocycle_violation(
    phi: Cochain,
    budget: Optional[int] = None,
    jobs: Optional[int] = None,
    normalization: bool = True,
) -> Optional[CocycleViolation]:
    """
    Exhaustively search for a failure of normalization or of ``dPhi = 0``.

    The first violating tuple in lexicographic order is returned, whatever
    the number of workers.

    Raises:
        BudgetExceededError: If ``|G|^4`` exceeds the budget.
    """
    group = phi.group
    n = group.order
    config.check_budget(n ** 4, "checking the 3-cocycle identity", budget)
    table = phi.tabulate(budget)

    bad = table.normalization_violation() if normalization else None
    if bad is not None:
        return CocycleViolation(
            "normalization", tuple(group.element_at(i) for i in bad), table.phase_at(bad)
        )

    T, den = table.values, table.denominator
    M = group.mul_table()

    def scan(rows: range) -> Optional[Tuple[int, int, int, int]]:
        for a in rows:
            Ta = T[a]
            diff = (T - T[M[a]] + Ta[M] - Ta[:, M] + Ta[:, :, None]) % den
            hits = np.argwhere(diff)
            if len(hits):
                b, c, d = (int(v) for v in hits[0])
                return a, b, c, d
        return None

    workers = config.jobs if jobs is None else jobs
    chunks = chunked(n, max(1, n // (4 * workers)))
    hit = first_hit(parallel_map(scan, chunks, workers))
    if hit is None:
        return None

    elems = tuple(group.element_at(i) for i in hit)
    value = _coboundary4_value(T, den, M, hit)
    logger.debug(f"3-cocycle identity fails at indices {hit}")
    return CocycleViolation("cocycle", elems, value)


def _coboundary4_value(T: np.ndarray, den: int, M: np.ndarray, idx: Tuple[int, int, int, int]) -> Phase:
    a, b, c, d = idx
    num = T[b, c, d] - T[M[a, b], c, d] + T[a, M[b, c], d] - T[a, b, M[c, d]] + T[a, b, c]
    return Phase(int(num), den)


def is_cocycle(phi: Cochain, budget: Optional[int] = None, jobs: Optional[int] = None) -> bool:
    """True when ``phi`` is a normalized 3-cocycle (exhaustive, ``O(|G|^4)``)."""
    return find_cocycle_violation(phi, budget, jobs) is None


def is_two_cocycle(cochain: Cochain, budget: Optional[int] = None) -> bool:
    """True when ``dJ = 0`` for the 2-cochain ``J``."""
    return Coboundary3(cochain).tabulate(budget).is_zero()


def random_cochain2(
    group: FinAbGroup,
    seed: Optional[int] = None,
    denominator: Optional[int] = None,
    normalized: bool = True,
) -> TabulatedCochain:
    """
    Seeded random 2-cochain with values in ``(1/denominator) Z / Z``.

    Args:
        group: Domain group.
        seed: RNG seed; defaults to the configured seed.
        denominator: Value denominator; defaults to the group exponent.
        normalized: Force ``J(e, x) = J(x, e) = 0``.
    """
    rng = np.random.default_rng(config.seed if seed is None else seed)
    den = denominator or lcm(*group.moduli)
    n = group.order
    if den < INT64_SAFE_BOUND:
        values = rng.integers(0, den, size=(n, n), dtype=np.int64)
    else:
        # 62-bit limbs, one more than needed, reduced mod den
        limbs = den.bit_length() // 62 + 2
        draws = rng.integers(0, INT64_SAFE_BOUND, size=(n, n, limbs), dtype=np.int64).astype(object)
        values = np.zeros((n, n), dtype=object)
        for k in range(limbs):
            values = values * INT64_SAFE_BOUND + draws[:, :, k]
        values = values % den
    if normalized:
        values[0, :] = 0
        values[:, 0] = 0
    return TabulatedCochain(group, PhaseTable(values, den))
