"""Root data ``(diagram, S, X)`` over a finite abelian group and their congruences."""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..cocycle import CocycleSpec, index_pairs, pair_key
from ..core import FinAbGroup, Phase, phase_sum, solve_congruence_system
from ..errors import InvalidInputError, PreconditionError
from ..resolution import GroupLift, lift_group
from .diagram import GeneralizedDynkinDiagram

logger = logging.getLogger(__name__)

Matrix = Tuple[Tuple[int, ...], ...]


def _as_matrix(rows: Sequence[Sequence[int]], name: str) -> Matrix:
    matrix = tuple(tuple(int(v) for v in row) for row in rows)
    if not matrix or len({len(r) for r in matrix}) != 1 or not matrix[0]:
        raise InvalidInputError(f"{name} must be a non-empty rectangular integer matrix")
    return matrix


@dataclass(frozen=True)
class RootDatum:
    """
    A diagram with parameter matrices over ``base_group``.

    ``S`` is ``rank x n``: the degree of vertex ``j`` is ``h_j = prod_k g_k^{s_jk}``
    in the squared group. ``X`` is ``n x rank``. ``T`` (``n x rank``) is solved
    from ``T S = I`` unless supplied.
    """

    base_group: FinAbGroup
    diagram: GeneralizedDynkinDiagram
    S: Matrix
    X: Matrix
    T: Optional[Matrix] = None

    def __post_init__(self):
        S = _as_matrix(self.S, "S")
        X = _as_matrix(self.X, "X")
        n, theta = self.base_group.rank, self.diagram.rank
        if (len(S), len(S[0])) != (theta, n):
            raise InvalidInputError(f"S must be {theta}x{n}, got {len(S)}x{len(S[0])}")
        if (len(X), len(X[0])) != (n, theta):
            raise InvalidInputError(f"X must be {n}x{theta}, got {len(X)}x{len(X[0])}")
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "X", X)
        if self.T is not None:
            T = _as_matrix(self.T, "T")
            if (len(T), len(T[0])) != (n, theta):
                raise InvalidInputError(f"T must be {n}x{theta}, got {len(T)}x{len(T[0])}")
            m = tuple(b * b for b in self.base_group.moduli)
            TS = product_TS(T, S)
            if any((TS[j][k] - (j == k)) % m[k] for j in range(n) for k in range(n)):
                raise InvalidInputError("Supplied T does not satisfy T S = I in the squared group")
            object.__setattr__(self, "T", T)

    @property
    def rank(self) -> int:
        return self.diagram.rank

    @cached_property
    def lift(self) -> GroupLift:
        return lift_group(self.base_group)

    @property
    def lifted_moduli(self) -> Tuple[int, ...]:
        return self.lift.lifted.moduli

    @cached_property
    def solved_T(self) -> Optional[Matrix]:
        """The supplied ``T`` or the solver's; None when ``S`` does not generate."""
        if self.T is not None:
            return self.T
        return solve_T(self.S, self.base_group)

    def braiding_constant(self, i: int, j: int) -> Phase:
        """``q_ij = sum_k s_ik x_kj / m_k``."""
        m = self.lifted_moduli
        return phase_sum(Phase(self.S[i][k] * self.X[k][j], m[k]) for k in range(len(m)))

    def implied_diagram(self) -> GeneralizedDynkinDiagram:
        theta = self.rank
        return GeneralizedDynkinDiagram(
            tuple(self.braiding_constant(i, i) for i in range(theta)),
            {
                (i, j): self.braiding_constant(i, j) + self.braiding_constant(j, i)
                for i, j in index_pairs(theta)
            },
        )

    def with_T(self, T: Sequence[Sequence[int]]) -> "RootDatum":
        return RootDatum(self.base_group, self.diagram, self.S, self.X, _as_matrix(T, "T"))

    def to_json(self) -> Dict[str, Any]:
        data = {
            "moduli": list(self.base_group.moduli),
            "diagram": self.diagram.to_json(),
            "S": [list(r) for r in self.S],
            "X": [list(r) for r in self.X],
        }
        T = self.solved_T
        if T is not None:
            data["T"] = [list(r) for r in T]
        return data


def solve_T(S: Sequence[Sequence[int]], base: FinAbGroup) -> Optional[Matrix]:
    """
    Solve ``T S = I`` with entry ``(j, k)`` taken modulo the lifted modulus ``m_k``.

    Returns:
        The row-wise lexicographically minimal ``T`` or None.
    """
    S = _as_matrix(S, "S")
    m = tuple(b * b for b in base.moduli)
    theta, n = len(S), len(S[0])
    if n != base.rank:
        raise InvalidInputError(f"S has {n} columns, base group has rank {base.rank}")
    # row k of the system: sum_l t_jl s_lk = delta_jk (mod m_k)
    system = [[S[l][k] for l in range(theta)] for k in range(n)]
    rows = []
    for j in range(n):
        rhs = [1 if k == j else 0 for k in range(n)]
        solution = solve_congruence_system(system, rhs, m, unknowns=theta)
        if solution is None:
            logger.debug(f"No row {j + 1} of T exists: the degrees do not generate g_{j + 1}")
            return None
        rows.append(tuple(solution))
    return tuple(rows)


def product_TS(T: Matrix, S: Matrix) -> List[List[int]]:
    return [
        [sum(T[j][l] * S[l][k] for l in range(len(S))) for k in range(len(S[0]))]
        for j in range(len(T))
    ]


@dataclass
class CongruenceReport:
    """The vanishing congruences and the values they force on ``a``."""

    holds: bool
    failures: List[Tuple[int, int, int]] = field(default_factory=list)
    a_l: List[int] = field(default_factory=list)
    a_ij: Dict[Tuple[int, int], int] = field(default_factory=dict)
    raw_form_consistent: bool = True

    def to_json(self) -> Dict[str, Any]:
        return {
            "holds": self.holds,
            "failures": [
                {"i": i + 1, "l": l + 1, "value": v} for i, l, v in self.failures
            ],
            "a_l": self.a_l,
            "a_ij": {pair_key(k): v for k, v in self.a_ij.items()},
            "raw_form_consistent": self.raw_form_consistent,
        }


def check_congruences(X: Sequence[Sequence[int]], T: Sequence[Sequence[int]], base: FinAbGroup) -> CongruenceReport:
    """
    Evaluate the congruences of a root datum.

    With ``b`` the base moduli and ``sigma_il = sum_j x_ij t_lj``:

    - ``sigma_il = 0 (mod b_i)`` for ``l < i`` must hold;
    - ``a_i = sigma_ii mod b_i``;
    - ``a_il = (b_l / b_i) sigma_il mod b_l`` for ``i < l``, also checked in
      the raw form ``sigma_il b_l = b_i a_il (mod b_i b_l)``.

    Raises:
        PreconditionError: If ``b`` is not in invariant-factor form.
    """
    b = base.moduli
    if not base.is_invariant_factor:
        raise PreconditionError(
            f"Moduli {list(b)} are not in invariant-factor form (b_i | b_(i+1)); "
            "reorder the cyclic factors"
        )
    n = base.rank

    def sigma(i: int, l: int) -> int:
        return sum(x * t for x, t in zip(X[i], T[l]))

    report = CongruenceReport(holds=True)
    for i in range(n):
        for l in range(i):
            value = sigma(i, l) % b[i]
            if value:
                report.failures.append((i, l, value))
    report.holds = not report.failures

    report.a_l = [sigma(i, i) % b[i] for i in range(n)]
    for i, l in index_pairs(n):
        value = (b[l] // b[i]) * sigma(i, l) % b[l]
        report.a_ij[(i, l)] = value
        if (sigma(i, l) * b[l] - b[i] * value) % (b[i] * b[l]):
            report.raw_form_consistent = False
    return report


def determine_a(datum: RootDatum) -> Optional[CocycleSpec]:
    """
    The abelian spec forced by the datum's congruences, or None when the
    vanishing congruences fail.

    ``a_ij`` is returned as its forced representative in ``[0, b_j)``.

    Raises:
        PreconditionError: If ``S`` does not generate or the base group is not
            in invariant-factor form.
    """
    T = datum.solved_T
    if T is None:
        raise PreconditionError("S does not generate the squared group; T S = I has no solution")
    report = check_congruences(datum.X, T, datum.base_group)
    if not report.holds:
        logger.info(f"Vanishing congruences fail at {report.failures}")
        return None
    return CocycleSpec(datum.base_group, tuple(report.a_l), report.a_ij)
