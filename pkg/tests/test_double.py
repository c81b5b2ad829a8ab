"""Tests for the twisted double and the Majid axioms."""

import random

import pytest

from src.cocycle import CocycleSpec, RepresentativeCocycle, TabulatedCochain, enumerate_specs
from src.core import FinAbGroup, Phase, ZERO
from src.double import (
    DoubleElem,
    double_multiply,
    gamma,
    is_abelian_bruteforce,
    is_abelian_spec,
    is_double_associative,
    majid_axiom_check,
    theta,
    theta_table,
)
from src.errors import BudgetExceededError, InvalidInputError


class TestTheta:
    def test_asymmetry_witness(self, z2_cubed, nonabelian_z2_cubed):
        phi = RepresentativeCocycle(nonabelian_z2_cubed)
        e1, e2, e3 = (z2_cubed.generator(i) for i in range(3))
        assert theta(phi, e1, e3, e2) == Phase(1, 2)
        assert theta(phi, e1, e2, e3) == ZERO

    def test_gamma(self, z2_cubed, nonabelian_z2_cubed):
        phi = RepresentativeCocycle(nonabelian_z2_cubed)
        e1, e2, e3 = (z2_cubed.generator(i) for i in range(3))
        assert gamma(phi, e1, e3, e2) == Phase(1, 2)
        for x in z2_cubed.elements():
            assert gamma(phi, z2_cubed.identity, x, e2) == ZERO
            assert gamma(phi, e1, z2_cubed.identity, x) == ZERO

    def test_table_matches_pointwise(self, z2_z4):
        phi = RepresentativeCocycle(CocycleSpec(z2_z4, (1, 3), {(0, 1): 1}))
        table = theta_table(phi)
        elems = list(z2_z4.elements())
        for a, g in enumerate(elems):
            for b, x in enumerate(elems):
                for c, y in enumerate(elems):
                    assert table.phase_at((a, b, c)) == theta(phi, g, x, y)


class TestDoubleMultiply:
    def test_composable_product(self, z2_cubed, nonabelian_z2_cubed):
        phi = RepresentativeCocycle(nonabelian_z2_cubed)
        e1, e2, e3 = (z2_cubed.generator(i) for i in range(3))
        product = double_multiply(phi, DoubleElem(e1, e3), DoubleElem(e1, e2))
        assert product.delta_part == e1
        assert product.group_part == z2_cubed.element([0, 1, 1])
        assert product.coefficient == Phase(1, 2)

    def test_orthogonal_idempotents_vanish(self, z2_cubed, nonabelian_z2_cubed):
        phi = RepresentativeCocycle(nonabelian_z2_cubed)
        e1, e2 = z2_cubed.generator(0), z2_cubed.generator(1)
        assert double_multiply(phi, DoubleElem(e1, e2), DoubleElem(e2, e1)) is None

    def test_rejects_foreign_elements(self, z2_z4, nonabelian_z2_cubed):
        phi = RepresentativeCocycle(nonabelian_z2_cubed)
        g = z2_z4.generator(1)
        with pytest.raises(InvalidInputError):
            double_multiply(phi, DoubleElem(g, g), DoubleElem(g, g))

    def test_json(self, z2_z4):
        elem = DoubleElem(z2_z4.identity, z2_z4.generator(0), Phase(1, 4))
        assert elem.to_json() == {
            "delta": {"exp": [0, 0]},
            "x": {"exp": [1, 0]},
            "coefficient": {"num": 1, "den": 4},
        }


class TestAbelianness:
    def test_parameters_agree_with_brute_force_on_z2_cubed(self, z2_cubed):
        specs = list(enumerate_specs(z2_cubed))
        assert len(specs) == 128
        for spec in specs:
            assert is_abelian_spec(spec) == is_abelian_bruteforce(RepresentativeCocycle(spec))

    @pytest.mark.parametrize("moduli", [(2, 4), (3, 3)])
    def test_rank_two_doubles_are_abelian(self, moduli):
        for spec in enumerate_specs(FinAbGroup(moduli)):
            assert is_abelian_bruteforce(RepresentativeCocycle(spec))

    def test_nonabelian_on_z3_cubed(self):
        G = FinAbGroup((3, 3, 3))
        spec = CocycleSpec(G, (0, 0, 0), {}, {(0, 1, 2): 2})
        assert not is_abelian_bruteforce(RepresentativeCocycle(spec))


class TestAssociativity:
    def test_doubles_of_cocycles_are_associative(self, z2_cubed, nonabelian_z2_cubed):
        assert is_double_associative(RepresentativeCocycle(nonabelian_z2_cubed))
        assert is_double_associative(RepresentativeCocycle(CocycleSpec(z2_cubed, (1, 1, 0), {(1, 2): 1})))

    def test_budget(self, z2_z4):
        with pytest.raises(BudgetExceededError):
            is_double_associative(RepresentativeCocycle(CocycleSpec(z2_z4, (0, 0))), budget=64)


class TestMajidAxioms:
    AXIOMS = {"quasi_associativity", "unit", "pentagon", "unit_normalization", "antipode", "quasi_antipode"}

    @pytest.mark.parametrize("moduli", [(2, 4), (2, 2, 2)])
    def test_hold_for_every_spec(self, moduli):
        for spec in enumerate_specs(FinAbGroup(moduli)):
            report = majid_axiom_check(spec)
            assert set(report.axioms) == self.AXIOMS
            assert report.holds, spec.sequence()

    @pytest.mark.slow
    def test_seeded_sample_on_order_sixteen(self):
        specs = list(enumerate_specs(FinAbGroup((2, 2, 4))))
        for spec in random.Random(16).sample(specs, 64):
            assert majid_axiom_check(spec).holds, spec.sequence()

    def test_quasi_antipode_failure(self):
        G = FinAbGroup((2,))
        phi = TabulatedCochain.from_phases(G, 3, [ZERO] * 7 + [Phase(1, 4)])
        result = majid_axiom_check(phi).axioms["quasi_antipode"]
        assert not result.holds
        assert result.counterexample == [[1]]

    def test_report_json(self, nonabelian_z2_cubed):
        data = majid_axiom_check(nonabelian_z2_cubed).to_json()
        assert data["holds"] is True
        assert data["moduli"] == [2, 2, 2]
        assert data["axioms"]["pentagon"] == {"holds": True, "counterexample": None}
        assert "note" in data["axioms"]["quasi_antipode"]

    def test_broken_pentagon(self):
        G = FinAbGroup((2,))
        phi = TabulatedCochain.from_phases(G, 3, [ZERO] * 7 + [Phase(1, 4)])
        report = majid_axiom_check(phi)
        assert not report.holds
        assert not report.axioms["pentagon"].holds
        assert len(report.axioms["pentagon"].counterexample) == 4

    def test_broken_normalization(self):
        G = FinAbGroup((2,))
        phases = [ZERO] * 8
        phases[5] = Phase(1, 2)  # (g, e, g)
        report = majid_axiom_check(TabulatedCochain.from_phases(G, 3, phases))
        assert not report.axioms["unit_normalization"].holds
        assert report.axioms["unit_normalization"].counterexample == [[1], [1]]
