"""Tests for the modular congruence solver and lattice echelon forms."""

from math import lcm

import pytest
from hypothesis import given, settings, strategies as st

from src.core import IntMatrixMod, lattice_echelon, solve_congruence_system
from src.errors import InvalidInputError


def _satisfies(matrix, rhs, moduli, x):
    return all(
        (sum(a * v for a, v in zip(row, x)) - b) % m == 0
        for row, b, m in zip(matrix, rhs, moduli)
    )


class TestSolveCongruenceSystem:
    def test_mixed_moduli_example(self):
        assert solve_congruence_system([[1], [3]], [1, 0], [2, 9]) == [3]

    def test_crt(self):
        assert solve_congruence_system([[1], [1]], [2, 3], [3, 5]) == [8]

    def test_insolvable(self):
        assert solve_congruence_system([[2]], [1], [4]) is None

    def test_lexicographically_minimal(self):
        # x + y = 1 (mod 2): (0, 1) beats (1, 0)
        assert solve_congruence_system([[1, 1]], [1], [2]) == [0, 1]

    def test_empty_system(self):
        assert solve_congruence_system([], [], [], unknowns=2) == [0, 0]

    def test_dimension_mismatch(self):
        with pytest.raises(InvalidInputError):
            solve_congruence_system([[1, 2]], [1, 2], [3])
        with pytest.raises(InvalidInputError):
            solve_congruence_system([[1]], [1], [0])

    @settings(max_examples=60)
    @given(data=st.data())
    def test_solution_is_sound_and_minimal(self, data):
        rows = data.draw(st.integers(1, 3))
        cols = data.draw(st.integers(1, 2))
        moduli = data.draw(st.lists(st.sampled_from([2, 3, 4, 6, 9]), min_size=rows, max_size=rows))
        matrix = data.draw(
            st.lists(st.lists(st.integers(-10, 10), min_size=cols, max_size=cols), min_size=rows, max_size=rows)
        )
        rhs = data.draw(st.lists(st.integers(-10, 10), min_size=rows, max_size=rows))

        x = solve_congruence_system(matrix, rhs, moduli)
        big = lcm(*moduli)
        brute = [
            [a, b][:cols]
            for a in range(big)
            for b in (range(big) if cols == 2 else [0])
            if _satisfies(matrix, rhs, moduli, [a, b][:cols])
        ]
        if not brute:
            assert x is None
        else:
            assert x == min(brute)


class TestLatticeEchelon:
    def test_generators_of_z4_z4(self):
        basis = lattice_echelon([[2, 2], [0, 2]], [4, 4])
        assert [row[k] for k, row in enumerate(basis)] == [2, 2]
        assert basis[1][0] == 0

    def test_pivots_divide_moduli(self):
        basis = lattice_echelon([[3, 1]], [9, 9])
        for k, row in enumerate(basis):
            assert all(v == 0 for v in row[:k])
            assert 9 % row[k] == 0

    def test_length_mismatch(self):
        with pytest.raises(InvalidInputError):
            lattice_echelon([[1]], [2, 2])


class TestIntMatrixMod:
    def test_column_bounds(self):
        M = IntMatrixMod(((1, 4), (0, 3)), (4, 4), axis="column")
        assert M.bound_violations() == [(0, 1, 4, 4)]

    def test_row_bounds(self):
        M = IntMatrixMod(((1, 8), (9, 1)), (9, 9))
        assert M.bound_violations() == [(1, 0, 9, 9)]
