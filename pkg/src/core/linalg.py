"""Integer linear algebra modulo per-row and per-column moduli."""

import logging
from dataclasses import dataclass
from math import lcm
from typing import List, Optional, Sequence, Tuple

from ..errors import InvalidInputError

logger = logging.getLogger(__name__)

Vector = List[int]


@dataclass(frozen=True)
class IntMatrixMod:
    """
    Integer matrix whose entries are bounded by per-row or per-column moduli.

    Args:
        entries: Row-major integer entries.
        moduli: One modulus per row (``axis="row"``) or per column.
        axis: Which index the moduli follow.
    """

    entries: Tuple[Tuple[int, ...], ...]
    moduli: Tuple[int, ...]
    axis: str = "row"

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        if rows and len({len(r) for r in rows}) != 1:
            raise InvalidInputError("Matrix rows have different lengths")
        if self.axis not in ("row", "column"):
            raise InvalidInputError(f"axis must be 'row' or 'column', got {self.axis!r}")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "moduli", tuple(int(m) for m in self.moduli))
        expected = self.shape[0] if self.axis == "row" else self.shape[1]
        if rows and len(self.moduli) != expected:
            raise InvalidInputError(
                f"{len(self.moduli)} moduli given for {expected} {self.axis}s"
            )

    @property
    def shape(self) -> Tuple[int, int]:
        return (len(self.entries), len(self.entries[0]) if self.entries else 0)

    def bound_violations(self) -> List[Tuple[int, int, int, int]]:
        """Entries outside ``[0, modulus)`` as ``(i, j, value, modulus)``."""
        bad = []
        for i, row in enumerate(self.entries):
            for j, x in enumerate(row):
                m = self.moduli[i] if self.axis == "row" else self.moduli[j]
                if not 0 <= x < m:
                    bad.append((i, j, x, m))
        return bad

    def column(self, j: int) -> Vector:
        return [row[j] for row in self.entries]

    def to_lists(self) -> List[List[int]]:
        return [list(row) for row in self.entries]


def _euclid_reduce(rows: List[Vector], col: int, column_moduli: Sequence[int]) -> Tuple[Optional[Vector], List[Vector]]:
    """
    Combine ``rows`` until at most one has a nonzero entry in ``col``.

    Returns:
        The pivot row (entry made positive) or None, and the remaining rows.
    """
    rows = [list(r) for r in rows]
    while True:
        live = [k for k, r in enumerate(rows) if r[col] != 0]
        if len(live) <= 1:
            break
        p = min(live, key=lambda k: (abs(rows[k][col]), k))
        pivot = rows[p]
        for k in live:
            if k == p:
                continue
            q = rows[k][col] // pivot[col]
            rows[k] = [a - q * b for a, b in zip(rows[k], pivot)]
    live = [k for k, r in enumerate(rows) if r[col] != 0]
    if not live:
        return None, rows
    pivot = rows.pop(live[0])
    if pivot[col] < 0:
        pivot = [-a for a in pivot]
    # entries right of the pivot only matter modulo their column modulus
    for j in range(col + 1, len(pivot)):
        pivot[j] %= column_moduli[j]
    return pivot, rows


def lattice_echelon(generators: Sequence[Sequence[int]], column_moduli: Sequence[int]) -> List[Vector]:
    """
    Upper-triangular basis of the lattice spanned by ``generators`` and
    ``column_moduli[k] * e_k``.

    Row ``k`` of the result has zeros left of column ``k`` and a positive
    pivot dividing ``column_moduli[k]``.
    """
    n = len(column_moduli)
    for g in generators:
        if len(g) != n:
            raise InvalidInputError(f"Generator {list(g)} has length {len(g)}, expected {n}")

    pool = [[int(x) for x in g] for g in generators]
    basis: List[Vector] = []
    for col in range(n):
        # the lattice contains every M_j e_j, so a fresh copy keeps reductions exact
        pool.extend(_unit(n, j, column_moduli[j]) for j in range(col, n))
        for row in pool:
            for j in range(col + 1, n):
                row[j] %= column_moduli[j]
        pivot, pool = _euclid_reduce(pool, col, column_moduli)
        basis.append(pivot)
        pool = [r for r in pool if any(r[col + 1:])]
    return basis


def _unit(n: int, j: int, value: int) -> Vector:
    v = [0] * n
    v[j] = value
    return v


def reduce_to_minimal(x: Sequence[int], basis: Sequence[Sequence[int]]) -> Vector:
    """Lexicographically minimal representative of ``x`` modulo the lattice."""
    x = list(x)
    for k, row in enumerate(basis):
        q = x[k] // row[k]
        if q:
            x = [a - q * b for a, b in zip(x, row)]
    return x


def solve_congruence_system(
    matrix: Sequence[Sequence[int]],
    rhs: Sequence[int],
    moduli: Sequence[int],
    unknowns: Optional[int] = None,
) -> Optional[Vector]:
    """
    Solve ``matrix @ x ≡ rhs`` with row ``i`` taken modulo ``moduli[i]``.

    Args:
        matrix: Coefficient rows.
        rhs: Right-hand side, one entry per row.
        moduli: Positive modulus per row.
        unknowns: Number of unknowns; required when ``matrix`` has no rows.

    Returns:
        The lexicographically minimal solution with entries in
        ``[0, lcm(moduli))``, or None when the system is insolvable.

    Raises:
        InvalidInputError: On dimension mismatch or non-positive moduli.
    """
    if isinstance(matrix, IntMatrixMod):
        matrix = matrix.to_lists()
    rows = [list(r) for r in matrix]
    if len(rhs) != len(rows) or len(moduli) != len(rows):
        raise InvalidInputError(
            f"Congruence system has {len(rows)} rows, {len(rhs)} right-hand sides "
            f"and {len(moduli)} moduli"
        )
    n = unknowns if unknowns is not None else (len(rows[0]) if rows else 0)
    if any(len(r) != n for r in rows):
        raise InvalidInputError(f"Every row must have {n} coefficients")
    if any(m < 1 for m in moduli):
        raise InvalidInputError(f"Moduli must be positive, got {list(moduli)}")
    if n == 0:
        return [] if all(b % m == 0 for b, m in zip(rhs, moduli)) else None

    big = lcm(*moduli) if moduli else 1
    uniform = [big] * n

    # solution set is x0 + span(basis); start from all of Z^n
    x0 = [0] * n
    basis = [_unit(n, k, 1) for k in range(n)]
    for row, b, m in zip(rows, rhs, moduli):
        scale = big // m
        a = [(c * scale) % big for c in row]
        target = (b * scale) % big

        # value of each basis vector under x -> a.x, plus the modulus itself
        pool = [[sum(p * q for p, q in zip(a, v)) % big] + list(v) for v in basis]
        pool.append([big] + [0] * n)
        pivot, rest = _euclid_reduce(pool, 0, [big] * (n + 1))
        step, direction = pivot[0], pivot[1:]

        delta = (target - sum(p * q for p, q in zip(a, x0))) % big
        if delta % step:
            logger.debug(f"Row {row} ≡ {b} (mod {m}) is inconsistent with earlier rows")
            return None
        k = delta // step
        x0 = [(u + k * v) % big for u, v in zip(x0, direction)]
        basis = lattice_echelon([r[1:] for r in rest], uniform)

    return reduce_to_minimal(x0, basis)
