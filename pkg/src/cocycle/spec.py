"""Parameter sequences ``a = (a_l, a_ij, a_rst)`` and the representative 3-cocycles."""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, prod
from typing import Any, Dict, Iterator, List, Mapping, Tuple

from ..core import FinAbGroup, GroupElem, Phase
from ..errors import InvalidInputError

Pair = Tuple[int, int]
Triple = Tuple[int, int, int]


def index_pairs(rank: int) -> List[Pair]:
    """Pairs ``i < j`` in lexicographic order (0-based)."""
    return list(itertools.combinations(range(rank), 2))


def index_triples(rank: int) -> List[Triple]:
    return list(itertools.combinations(range(rank), 3))


def pair_key(pair: Tuple[int, ...]) -> str:
    """JSON key for an index tuple, 1-based: ``(0, 2) -> "1,3"``."""
    return ",".join(str(i + 1) for i in pair)


def parse_pair_key(key: str, size: int) -> Tuple[int, ...]:
    try:
        parts = tuple(int(p) - 1 for p in key.split(","))
    except ValueError:
        raise InvalidInputError(f"Malformed index key {key!r}")
    if len(parts) != size or any(p < 0 for p in parts) or list(parts) != sorted(set(parts)):
        raise InvalidInputError(f"Index key {key!r} must list {size} increasing 1-based indices")
    return parts


@dataclass(frozen=True)
class CocycleSpec:
    """
    The sequence indexing the representative cocycle ``Phi_a``.

    ``a_ij`` is canonical in ``[0, gcd(m_i, m_j))``; a forced representative
    in ``[0, m_j)`` is also accepted, and its class is ``a_ij mod gcd``.
    Missing pairs and triples default to zero.
    """

    group: FinAbGroup
    a_l: Tuple[int, ...]
    a_ij: Mapping[Pair, int] = field(default_factory=dict)
    a_rst: Mapping[Triple, int] = field(default_factory=dict)

    def __post_init__(self):
        m = self.group.moduli
        a_l = tuple(int(v) for v in self.a_l)
        if len(a_l) != self.group.rank:
            raise InvalidInputError(f"a_l has {len(a_l)} entries, group has rank {self.group.rank}")
        for l, v in enumerate(a_l):
            if not 0 <= v < m[l]:
                raise InvalidInputError(f"a_{l + 1} = {v} outside [0, {m[l]})")

        pairs = index_pairs(self.group.rank)
        a_ij = {p: 0 for p in pairs}
        for key, v in dict(self.a_ij).items():
            key = tuple(key)
            if key not in a_ij:
                raise InvalidInputError(f"a_ij index {pair_key(key)} is not a pair i<j of the group")
            if not 0 <= v < m[key[1]]:
                raise InvalidInputError(f"a_{pair_key(key)} = {v} outside [0, {m[key[1]]})")
            a_ij[key] = int(v)

        triples = index_triples(self.group.rank)
        a_rst = {t: 0 for t in triples}
        for key, v in dict(self.a_rst).items():
            key = tuple(key)
            if key not in a_rst:
                raise InvalidInputError(f"a_rst index {pair_key(key)} is not a triple r<s<t of the group")
            bound = triple_gcd(self.group, key)
            if not 0 <= v < bound:
                raise InvalidInputError(f"a_{pair_key(key)} = {v} outside [0, {bound})")
            a_rst[key] = int(v)

        object.__setattr__(self, "a_l", a_l)
        object.__setattr__(self, "a_ij", a_ij)
        object.__setattr__(self, "a_rst", a_rst)

    def __hash__(self) -> int:
        return hash((self.group, self.sequence()))

    def sequence(self) -> Tuple[int, ...]:
        """``(a_l..., a_ij..., a_rst...)`` in lexicographic index order."""
        return (
            self.a_l
            + tuple(self.a_ij[p] for p in index_pairs(self.group.rank))
            + tuple(self.a_rst[t] for t in index_triples(self.group.rank))
        )

    @property
    def is_zero(self) -> bool:
        return not any(self.sequence())

    @property
    def is_abelian(self) -> bool:
        return not any(self.a_rst.values())

    @property
    def is_canonical(self) -> bool:
        return all(v < pair_gcd(self.group, p) for p, v in self.a_ij.items())

    def canonical(self) -> "CocycleSpec":
        """The cohomologous spec with every ``a_ij`` reduced modulo ``gcd(m_i, m_j)``."""
        return CocycleSpec(
            self.group,
            self.a_l,
            {p: v % pair_gcd(self.group, p) for p, v in self.a_ij.items()},
            self.a_rst,
        )

    def to_json(self) -> Dict[str, Any]:
        return {
            "moduli": list(self.group.moduli),
            "a_l": list(self.a_l),
            "a_ij": {pair_key(p): v for p, v in self.a_ij.items()},
            "a_rst": {pair_key(t): v for t, v in self.a_rst.items()},
        }


def pair_gcd(group: FinAbGroup, pair: Pair) -> int:
    i, j = pair
    return gcd(group.moduli[i], group.moduli[j])


def triple_gcd(group: FinAbGroup, triple: Triple) -> int:
    r, s, t = triple
    return gcd(group.moduli[r], group.moduli[s], group.moduli[t])


def zero_spec(group: FinAbGroup) -> CocycleSpec:
    return CocycleSpec(group, (0,) * group.rank)


def spec_bounds(group: FinAbGroup) -> List[int]:
    """Exclusive upper bounds of the canonical sequence, in sequence order."""
    return (
        list(group.moduli)
        + [pair_gcd(group, p) for p in index_pairs(group.rank)]
        + [triple_gcd(group, t) for t in index_triples(group.rank)]
    )


def count_specs(group: FinAbGroup) -> int:
    """Order of ``H^3(G, k*)``: product of all moduli, pairwise and triple gcds."""
    return prod(spec_bounds(group))


def spec_from_sequence(group: FinAbGroup, values: Tuple[int, ...]) -> CocycleSpec:
    n = group.rank
    pairs = index_pairs(n)
    triples = index_triples(n)
    if len(values) != n + len(pairs) + len(triples):
        raise InvalidInputError(f"Sequence of length {len(values)} does not fit rank {n}")
    return CocycleSpec(
        group,
        tuple(values[:n]),
        dict(zip(pairs, values[n:n + len(pairs)])),
        dict(zip(triples, values[n + len(pairs):])),
    )


def enumerate_specs(group: FinAbGroup) -> Iterator[CocycleSpec]:
    """All canonical specs, lexicographic in the sequence."""
    for values in itertools.product(*(range(b) for b in spec_bounds(group))):
        yield spec_from_sequence(group, values)


def phi_eval(spec: CocycleSpec, x: GroupElem, y: GroupElem, z: GroupElem) -> Phase:
    """
    Evaluate the representative cocycle ``Phi_a(x, y, z)``.

    With ``x = (i)``, ``y = (j)``, ``z = (k)`` canonical::

        sum_l   a_l/m_l   * i_l * [(j_l + k_l)/m_l]
      + sum_s<t a_st/m_t  * i_t * [(j_s + k_s)/m_s]
      - sum_r<s<t a_rst/(m_r, m_s, m_t) * k_r * j_s * i_t
    """
    group = spec.group
    i, j, k = (group.check(e) for e in (x, y, z))
    m = group.moduli
    total = Fraction(0)
    for l, a in enumerate(spec.a_l):
        if a:
            total += Fraction(a * i[l] * ((j[l] + k[l]) // m[l]), m[l])
    for (s, t), a in spec.a_ij.items():
        if a:
            total += Fraction(a * i[t] * ((j[s] + k[s]) // m[s]), m[t])
    for (r, s, t), a in spec.a_rst.items():
        if a:
            total -= Fraction(a * k[r] * j[s] * i[t], triple_gcd(group, (r, s, t)))
    return Phase.from_fraction(total)
