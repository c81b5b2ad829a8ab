"""Finite abelian groups given as products of cyclic factors."""

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from math import prod
from typing import Any, Dict, Iterator, List, Sequence, Tuple

import numpy as np
from sympy import factorint
from sympy.ntheory.modular import crt

from ..errors import InvalidInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroupElem:
    """Exponent vector ``(i_1, ..., i_n)`` of ``g_1^{i_1} ... g_n^{i_n}``."""

    exponents: Tuple[int, ...]

    def __iter__(self) -> Iterator[int]:
        return iter(self.exponents)

    def __len__(self) -> int:
        return len(self.exponents)

    def __getitem__(self, k: int) -> int:
        return self.exponents[k]

    def to_json(self) -> Dict[str, List[int]]:
        return {"exp": list(self.exponents)}


@dataclass(frozen=True)
class FinAbGroup:
    """``Z_{m_1} x ... x Z_{m_n}``; elements are listed lexicographically."""

    moduli: Tuple[int, ...]

    def __post_init__(self):
        moduli = tuple(int(m) for m in self.moduli)
        if not moduli:
            raise InvalidInputError("A group needs at least one cyclic factor")
        if any(m < 1 for m in moduli):
            raise InvalidInputError(f"Cyclic orders must be positive, got {list(moduli)}")
        object.__setattr__(self, "moduli", moduli)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def order(self) -> int:
        return prod(self.moduli)

    @property
    def is_invariant_factor(self) -> bool:
        """True when ``m_i | m_{i+1}`` for every consecutive pair."""
        return all(b % a == 0 for a, b in zip(self.moduli, self.moduli[1:]))

    @property
    def identity(self) -> GroupElem:
        return GroupElem((0,) * self.rank)

    def generator(self, i: int) -> GroupElem:
        """The generator ``g_i`` (0-based index)."""
        exps = [0] * self.rank
        exps[i] = 1 % self.moduli[i]
        return GroupElem(tuple(exps))

    def element(self, exponents: Sequence[int]) -> GroupElem:
        """Build an element, reducing exponents to canonical representatives."""
        if len(exponents) != self.rank:
            raise InvalidInputError(
                f"Element has {len(exponents)} exponents, group has rank {self.rank}"
            )
        return GroupElem(tuple(int(e) % m for e, m in zip(exponents, self.moduli)))

    def check(self, elem: GroupElem) -> GroupElem:
        """Return ``elem`` after confirming it is canonical for this group."""
        if len(elem) != self.rank:
            raise InvalidInputError(
                f"Element {list(elem)} does not belong to a rank-{self.rank} group"
            )
        if any(not 0 <= e < m for e, m in zip(elem, self.moduli)):
            raise InvalidInputError(
                f"Element {list(elem)} is not canonical for moduli {list(self.moduli)}"
            )
        return elem

    def elements(self) -> Iterator[GroupElem]:
        for exps in itertools.product(*(range(m) for m in self.moduli)):
            yield GroupElem(exps)

    def index_of(self, elem: GroupElem) -> int:
        index = 0
        for e, m in zip(elem, self.moduli):
            index = index * m + e
        return index

    def element_at(self, index: int) -> GroupElem:
        exps = []
        for m in reversed(self.moduli):
            index, e = divmod(index, m)
            exps.append(e)
        return GroupElem(tuple(reversed(exps)))

    def exponent_array(self) -> np.ndarray:
        """Exponent vectors of all elements, shape ``(order, rank)``."""
        return self._exponents.copy()

    @cached_property
    def _exponents(self) -> np.ndarray:
        grids = np.meshgrid(*(np.arange(m, dtype=np.int64) for m in self.moduli), indexing="ij")
        return np.stack([g.reshape(-1) for g in grids], axis=1)

    @cached_property
    def _place_values(self) -> np.ndarray:
        places = [1]
        for m in reversed(self.moduli[1:]):
            places.append(places[-1] * m)
        return np.array(list(reversed(places)), dtype=np.int64)

    def indices_of(self, exponents: np.ndarray) -> np.ndarray:
        """Vectorized ``index_of`` for an array of exponent vectors (last axis)."""
        reduced = np.mod(exponents, np.array(self.moduli, dtype=np.int64))
        return reduced @ self._place_values

    def mul_table(self) -> np.ndarray:
        """``table[a, b]`` is the index of the product of elements ``a`` and ``b``."""
        exps = self._exponents
        return self.indices_of(exps[:, None, :] + exps[None, :, :])

    def inverse_table(self) -> np.ndarray:
        return self.indices_of(-self._exponents)

    def to_json(self) -> Dict[str, Any]:
        return {"moduli": list(self.moduli), "invariant_factor": self.is_invariant_factor}


def elem_mul(group: FinAbGroup, a: GroupElem, b: GroupElem) -> GroupElem:
    group.check(a)
    group.check(b)
    return GroupElem(tuple((x + y) % m for x, y, m in zip(a, b, group.moduli)))


def elem_inverse(group: FinAbGroup, a: GroupElem) -> GroupElem:
    group.check(a)
    return GroupElem(tuple((-x) % m for x, m in zip(a, group.moduli)))


def elem_power(group: FinAbGroup, a: GroupElem, k: int) -> GroupElem:
    group.check(a)
    return GroupElem(tuple((x * k) % m for x, m in zip(a, group.moduli)))


@dataclass(frozen=True)
class GroupIsomorphism:
    """
    CRT regrouping between a cyclic decomposition and its invariant factors.

    ``slots[k]`` lists ``(source_factor, prime_power)`` pairs whose product is
    the ``k``-th invariant factor of ``target``.
    """

    source: FinAbGroup
    target: FinAbGroup
    slots: Tuple[Tuple[Tuple[int, int], ...], ...]

    def forward(self, elem: GroupElem) -> GroupElem:
        self.source.check(elem)
        exps = []
        for parts in self.slots:
            if not parts:
                exps.append(0)
                continue
            residues = [elem[i] % q for i, q in parts]
            exps.append(int(crt([q for _, q in parts], residues)[0]))
        return self.target.element(exps)

    def backward(self, elem: GroupElem) -> GroupElem:
        self.target.check(elem)
        residues: Dict[int, List[Tuple[int, int]]] = {}
        for k, parts in enumerate(self.slots):
            for i, q in parts:
                residues.setdefault(i, []).append((elem[k] % q, q))
        exps = []
        for i in range(self.source.rank):
            found = residues.get(i)
            if not found:
                exps.append(0)
                continue
            exps.append(int(crt([q for _, q in found], [r for r, _ in found])[0]))
        return self.source.element(exps)


def invariant_factor_form(group: FinAbGroup) -> Tuple[FinAbGroup, GroupIsomorphism]:
    """
    Regroup the prime-power parts of ``group`` into invariant factors.

    Returns:
        The isomorphic group with ``m_i | m_{i+1}`` and the isomorphism data.
    """
    # prime -> [(exponent, factor index)] sorted so the largest power comes last
    primary: Dict[int, List[Tuple[int, int]]] = {}
    for i, m in enumerate(group.moduli):
        for p, e in factorint(m).items():
            primary.setdefault(int(p), []).append((int(e), i))
    for parts in primary.values():
        parts.sort()

    width = max((len(parts) for parts in primary.values()), default=0)
    if width == 0:
        target = FinAbGroup((1,))
        return target, GroupIsomorphism(group, target, ((),))

    slots: List[List[Tuple[int, int]]] = [[] for _ in range(width)]
    for p in sorted(primary):
        parts = primary[p]
        offset = width - len(parts)
        for k, (e, i) in enumerate(parts):
            slots[offset + k].append((i, p ** e))

    target = FinAbGroup(tuple(prod(q for _, q in parts) for parts in slots))
    logger.debug(f"Invariant factors of {list(group.moduli)}: {list(target.moduli)}")
    return target, GroupIsomorphism(group, target, tuple(tuple(s) for s in slots))
