"""Generalized Dynkin diagrams and twist equivalence."""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from ..config import config
from ..core import Phase
from ..cocycle import index_pairs, pair_key
from ..errors import InvalidInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneralizedDynkinDiagram:
    """
    Vertex labels ``q_ii`` and edge labels ``q~_ij = q_ij q_ji``.

    Only edges with a nonzero label are stored, keyed by ``(i, j)`` with ``i < j``.
    """

    q_ii: Tuple[Phase, ...]
    q_tilde: Mapping[Tuple[int, int], Phase] = field(default_factory=dict)

    def __post_init__(self):
        q_ii = tuple(self.q_ii)
        if not q_ii:
            raise InvalidInputError("A diagram needs at least one vertex")
        edges = {}
        for (i, j), label in dict(self.q_tilde).items():
            if not (0 <= i < j < len(q_ii)):
                raise InvalidInputError(f"Edge {pair_key((i, j))} is not a pair i<j of vertices")
            if label:
                edges[(i, j)] = label
        object.__setattr__(self, "q_ii", q_ii)
        object.__setattr__(self, "q_tilde", dict(sorted(edges.items())))

    def __hash__(self) -> int:
        return hash((self.q_ii, tuple(self.q_tilde.items())))

    @property
    def rank(self) -> int:
        return len(self.q_ii)

    def edge(self, i: int, j: int) -> Phase:
        """``q~_ij`` for any ``i != j``; 0-phase when there is no edge."""
        key = (min(i, j), max(i, j))
        return self.q_tilde.get(key, Phase())

    def edges(self) -> List[Tuple[int, int]]:
        return list(self.q_tilde)

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(self.rank):
                if j not in seen and self.edge(i, j):
                    seen.add(j)
                    stack.append(j)
        return len(seen) == self.rank

    def to_json(self) -> Dict[str, Any]:
        return {
            "q_ii": [p.to_json() for p in self.q_ii],
            "q_tilde": {pair_key(k): v.to_json() for k, v in self.q_tilde.items()},
        }


def diagram_from_constants(
    q_ii: Sequence[Phase],
    q_tilde: Mapping[Tuple[int, int], Phase],
) -> GeneralizedDynkinDiagram:
    """
    Build a diagram from vertex and edge labels.

    ``q_tilde`` may list a pair in either orientation, or both when they agree.

    Raises:
        InvalidInputError: If the two orientations of a pair disagree.
    """
    edges: Dict[Tuple[int, int], Phase] = {}
    for (i, j), label in q_tilde.items():
        if i == j:
            raise InvalidInputError(f"q~ is not defined on the diagonal ({i + 1},{j + 1})")
        key = (min(i, j), max(i, j))
        if key in edges and edges[key] != label:
            raise InvalidInputError(
                f"q~ is not symmetric at {pair_key(key)}: {edges[key]} vs {label}"
            )
        edges[key] = label
    return GeneralizedDynkinDiagram(tuple(q_ii), edges)


def diagram_from_braiding(q: Sequence[Sequence[Phase]]) -> GeneralizedDynkinDiagram:
    """Diagram of a full braiding matrix ``(q_ij)``."""
    n = len(q)
    if any(len(row) != n for row in q):
        raise InvalidInputError("Braiding matrix must be square")
    return GeneralizedDynkinDiagram(
        tuple(q[i][i] for i in range(n)),
        {(i, j): q[i][j] + q[j][i] for i, j in index_pairs(n)},
    )


def is_cartan_type(diagram: GeneralizedDynkinDiagram, cartan: Sequence[Sequence[int]]) -> bool:
    """True when ``q~_ij = q_ii^{c_ij}`` for all ``i != j``."""
    n = diagram.rank
    if len(cartan) != n:
        raise InvalidInputError(f"Cartan matrix has {len(cartan)} rows, diagram has rank {n}")
    return all(
        diagram.edge(i, j) == diagram.q_ii[i].scale(cartan[i][j])
        for i in range(n)
        for j in range(n)
        if i != j
    )


def twist_equivalent(
    first: GeneralizedDynkinDiagram,
    second: GeneralizedDynkinDiagram,
    rank_bound: Optional[int] = None,
) -> Optional[Tuple[int, ...]]:
    """
    Lexicographically first vertex permutation ``tau`` carrying ``first`` onto ``second``.

    Returns:
        ``tau`` as a 0-based tuple with ``tau[i]`` the image of vertex ``i``,
        or None when the diagrams are not twist equivalent.

    Raises:
        InvalidInputError: If the rank exceeds the configured bound.
    """
    bound = config.twist_rank_bound if rank_bound is None else rank_bound
    if max(first.rank, second.rank) > bound:
        raise InvalidInputError(
            f"Rank {max(first.rank, second.rank)} exceeds the twist-equivalence bound {bound}; "
            "raise it with MAJID_TWIST_RANK_BOUND"
        )
    if first.rank != second.rank:
        return None
    n = first.rank
    if sorted(first.q_ii) != sorted(second.q_ii):
        return None

    for tau in itertools.permutations(range(n)):
        if any(second.q_ii[tau[i]] != first.q_ii[i] for i in range(n)):
            continue
        if all(second.edge(tau[i], tau[j]) == first.edge(i, j) for i, j in index_pairs(n)):
            logger.debug(f"Twist equivalence found: {tau}")
            return tau
    return None
