"""Arithmetic helpers for the standard construction."""

from math import isqrt, prod

from sympy import factorint

from ..errors import InvalidInputError


def upsilon(k: int) -> int:
    """Round ``k`` up to the next even number."""
    if k < 0:
        raise InvalidInputError(f"upsilon needs k >= 0, got {k}")
    return k + 1 if k % 2 else k


def big_upsilon(k: int) -> int:
    """
    Smallest perfect square divisible by ``k``: every prime exponent of ``k``
    rounded up to an even number.
    """
    if k < 1:
        raise InvalidInputError(f"Upsilon needs k >= 1, got {k}")
    return prod(int(p) ** upsilon(int(e)) for p, e in factorint(k).items())


def squarefree(k: int) -> bool:
    if k < 1:
        raise InvalidInputError(f"squarefree needs k >= 1, got {k}")
    return all(e == 1 for e in factorint(k).values())


def square_root(k: int) -> int:
    root = isqrt(k)
    if root * root != k:
        raise InvalidInputError(f"{k} is not a perfect square")
    return root


def table_m_value(q_order: int) -> int:
    """The closed-form ``m`` listed for rank-one standard diagrams of order ``|q|``."""
    return big_upsilon(q_order) if q_order % 2 == 0 else 2 * big_upsilon(q_order)
