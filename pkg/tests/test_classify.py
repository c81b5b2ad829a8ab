"""Tests for the K-complex pushdown, coboundary decision and classification."""

import importlib

import pytest
from hypothesis import given, settings, strategies as st

from src.cocycle import (
    Coboundary3,
    CocycleSpec,
    KCochain3,
    RepresentativeCocycle,
    TabulatedCochain,
    classify,
    enumerate_specs,
    is_coboundary,
    k_is_coboundary,
    k_is_cocycle,
    pushdown_F3,
    random_cochain2,
    spec_from_sequence,
    witness_to_json,
    zero_spec,
)
from src.cocycle.kcomplex import solve_pair
from src.cocycle.spec import spec_bounds
from src.core import FinAbGroup, Phase, ZERO
from src.errors import ClassificationError, PreconditionError

classify_module = importlib.import_module("src.cocycle.classify")


def _broken_z2_cochain() -> TabulatedCochain:
    return TabulatedCochain.from_phases(FinAbGroup((2,)), 3, [ZERO] * 7 + [Phase(1, 4)])


class TestPushdown:
    def test_diagonal_and_triple_values(self, z2_cubed):
        spec = CocycleSpec(z2_cubed, (1, 0, 1), {}, {(0, 1, 2): 1})
        f = pushdown_F3(RepresentativeCocycle(spec))
        assert f.f_rrr == (Phase(1, 2), ZERO, Phase(1, 2))
        assert f.f_rst[(0, 1, 2)] == Phase(1, 2)
        assert k_is_cocycle(f, z2_cubed)

    def test_zero_cochain(self, z2_z4):
        f = pushdown_F3(RepresentativeCocycle(zero_spec(z2_z4)))
        assert f == KCochain3.zero(2)

    def test_json_keys(self):
        data = KCochain3.zero(3).to_json()
        assert sorted(data["f_rst"]) == ["1,2,3"]
        assert sorted(data["f_rrs"]) == ["1,2", "1,3", "2,3"]

    def test_broken_cochain_fails_the_criterion(self):
        f = pushdown_F3(_broken_z2_cochain())
        assert not k_is_cocycle(f, FinAbGroup((2,)))
        with pytest.raises(PreconditionError):
            k_is_coboundary(f, FinAbGroup((2,)))


class TestSolvePair:
    def test_least_solution(self):
        assert solve_pair(Phase(1, 2), ZERO, 2, 4) == Phase(1, 4)

    def test_trivial(self):
        assert solve_pair(ZERO, ZERO, 3, 3) == ZERO

    def test_insolvable(self):
        assert solve_pair(Phase(1, 4), ZERO, 2, 4) is None


class TestIsCoboundary:
    @pytest.mark.parametrize("moduli", [(2, 2), (2, 4), (3, 3), (2, 2, 2)])
    def test_only_the_zero_class_is_trivial(self, moduli):
        G = FinAbGroup(moduli)
        for spec in enumerate_specs(G):
            witness = is_coboundary(RepresentativeCocycle(spec))
            assert (witness is not None) == spec.is_zero, spec.sequence()

    def test_random_coboundaries(self, z2_z4):
        for seed in range(10):
            witness = is_coboundary(Coboundary3(random_cochain2(z2_z4, seed=seed)))
            assert witness is not None
            assert set(witness_to_json(witness)) == {"1,2"}

    def test_exhaustive_precondition(self):
        with pytest.raises(PreconditionError):
            is_coboundary(_broken_z2_cochain(), exhaustive=True)
        with pytest.raises(PreconditionError):
            is_coboundary(_broken_z2_cochain())

    def test_witness_json(self):
        assert witness_to_json(None) is None
        assert witness_to_json({(0, 1): Phase(1, 4)}) == {"1,2": {"num": 1, "den": 4}}


class TestClassify:
    @pytest.mark.parametrize("moduli", [(2, 4), (3, 3), (2, 2, 2)])
    def test_representatives_classify_to_themselves(self, moduli):
        G = FinAbGroup(moduli)
        for spec in enumerate_specs(G):
            assert classify(RepresentativeCocycle(spec)) == spec

    def test_forced_representative(self, z2_z4):
        spec = CocycleSpec(z2_z4, (1, 0), {(0, 1): 3})
        assert classify(RepresentativeCocycle(spec)) == spec.canonical()

    @pytest.mark.parametrize("denominator", [None, 7])
    @pytest.mark.parametrize("moduli", [(2, 4), (3, 3)])
    def test_invariant_under_coboundaries(self, moduli, denominator):
        G = FinAbGroup(moduli)
        specs = list(enumerate_specs(G))
        for seed in range(100):
            spec = specs[seed % len(specs)]
            J = random_cochain2(G, seed=seed, denominator=denominator)
            phi = RepresentativeCocycle(spec) + Coboundary3(J)
            assert classify(phi) == spec, (seed, spec.sequence())

    @pytest.mark.parametrize("denominator", [2 ** 61 - 1, 2 ** 62 + 135, 2 ** 89 - 1])
    def test_huge_denominators(self, denominator):
        G = FinAbGroup((2, 2))
        spec = CocycleSpec(G, (1, 0), {(0, 1): 1})
        J = random_cochain2(G, seed=3, denominator=denominator)
        assert J.tabulate().denominator == denominator
        phi = RepresentativeCocycle(spec) + Coboundary3(J)
        assert classify(phi) == spec
        assert classify(phi, exhaustive=True) == spec

    @pytest.mark.slow
    def test_invariant_under_coboundaries_long(self):
        G = FinAbGroup((2, 2, 4))
        specs = list(enumerate_specs(G))
        for seed in range(100):
            spec = specs[(37 * seed) % len(specs)]
            phi = RepresentativeCocycle(spec) + Coboundary3(random_cochain2(G, seed=seed))
            assert classify(phi) == spec

    @settings(max_examples=30, deadline=None)
    @given(data=st.data())
    def test_z3_cubed_round_trip(self, data):
        G = FinAbGroup((3, 3, 3))
        values = tuple(data.draw(st.integers(0, b - 1)) for b in spec_bounds(G))
        spec = spec_from_sequence(G, values)
        assert classify(RepresentativeCocycle(spec)) == spec

    def test_exhaustive_mode_agrees(self, nonabelian_z2_cubed):
        phi = RepresentativeCocycle(nonabelian_z2_cubed)
        assert classify(phi, exhaustive=True) == classify(phi)

    def test_rejects_non_cocycles(self):
        with pytest.raises(PreconditionError):
            classify(_broken_z2_cochain())

    def test_falls_back_to_enumeration(self, monkeypatch, z2_z4):
        spec = CocycleSpec(z2_z4, (1, 2), {(0, 1): 1})
        monkeypatch.setattr(classify_module, "_extract_candidate", lambda phi: None)
        assert classify(RepresentativeCocycle(spec)) == spec
        with pytest.raises(ClassificationError):
            classify(RepresentativeCocycle(spec), fallback_limit=4)
