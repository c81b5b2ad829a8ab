"""Tests for finite abelian groups and invariant-factor regrouping."""

import pytest
from hypothesis import given, strategies as st

from src.core import FinAbGroup, GroupElem, elem_inverse, elem_mul, elem_power, invariant_factor_form
from src.errors import InvalidInputError

moduli_lists = st.lists(st.integers(1, 12), min_size=1, max_size=3)


class TestFinAbGroup:
    def test_order_rank_and_flag(self):
        G = FinAbGroup((2, 4))
        assert (G.order, G.rank) == (8, 2)
        assert G.is_invariant_factor
        assert not FinAbGroup((4, 2)).is_invariant_factor

    def test_rejects_bad_moduli(self):
        with pytest.raises(InvalidInputError):
            FinAbGroup(())
        with pytest.raises(InvalidInputError):
            FinAbGroup((0, 2))

    def test_elements_are_lexicographic(self):
        G = FinAbGroup((2, 3))
        listed = [tuple(g) for g in G.elements()]
        assert listed == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]
        assert all(G.index_of(g) == k for k, g in enumerate(G.elements()))
        assert G.element_at(4) == GroupElem((1, 1))

    def test_element_normalizes_and_check_rejects(self):
        G = FinAbGroup((2, 4))
        assert G.element([3, -1]) == GroupElem((1, 3))
        with pytest.raises(InvalidInputError):
            G.check(GroupElem((2, 0)))
        with pytest.raises(InvalidInputError):
            G.element([1])

    def test_arithmetic(self):
        G = FinAbGroup((2, 4))
        a, b = GroupElem((1, 3)), GroupElem((1, 2))
        assert elem_mul(G, a, b) == GroupElem((0, 1))
        assert elem_inverse(G, a) == GroupElem((1, 1))
        assert elem_power(G, a, 3) == GroupElem((1, 1))

    def test_tables_agree_with_pointwise_arithmetic(self):
        G = FinAbGroup((2, 3))
        M = G.mul_table()
        inv = G.inverse_table()
        for a in G.elements():
            for b in G.elements():
                assert M[G.index_of(a), G.index_of(b)] == G.index_of(elem_mul(G, a, b))
            assert inv[G.index_of(a)] == G.index_of(elem_inverse(G, a))

    def test_json(self):
        assert FinAbGroup((4, 2)).to_json() == {"moduli": [4, 2], "invariant_factor": False}
        assert GroupElem((1, 0)).to_json() == {"exp": [1, 0]}


class TestInvariantFactorForm:
    @pytest.mark.parametrize(
        "moduli, expected",
        [((2, 3), (6,)), ((4, 2), (2, 4)), ((6, 4), (2, 12)), ((2, 2, 4), (2, 2, 4)), ((1,), (1,))],
    )
    def test_known_forms(self, moduli, expected):
        target, _ = invariant_factor_form(FinAbGroup(moduli))
        assert target.moduli == expected
        assert target.is_invariant_factor

    @given(moduli=moduli_lists, data=st.data())
    def test_isomorphism_round_trip_and_homomorphism(self, moduli, data):
        G = FinAbGroup(tuple(moduli))
        target, iso = invariant_factor_form(G)
        assert target.order == G.order
        a = G.element(data.draw(st.lists(st.integers(0, 100), min_size=G.rank, max_size=G.rank)))
        b = G.element(data.draw(st.lists(st.integers(0, 100), min_size=G.rank, max_size=G.rank)))
        assert iso.backward(iso.forward(a)) == a
        assert iso.forward(elem_mul(G, a, b)) == elem_mul(target, iso.forward(a), iso.forward(b))
