"""Tests for the squared-group lift, the resolving cochain and the obstruction."""

import pytest

from src.cocycle import (
    Coboundary3,
    CocycleSpec,
    RepresentativeCocycle,
    enumerate_specs,
    is_cocycle,
    zero_spec,
)
from src.core import FinAbGroup, GroupElem, Phase
from src.errors import BudgetExceededError, InvalidInputError, PreconditionError
from src.resolution import (
    GroupLift,
    ResolvingCochain,
    correction_coefficient,
    j_eval,
    lift_group,
    obstruction_check,
    pullback_cochain,
    verify_resolution,
)


class TestGroupLift:
    def test_squares_the_moduli(self, z2_z4):
        lift = lift_group(z2_z4)
        assert lift.lifted.moduli == (4, 16)

    def test_project_and_section(self, z2_z4):
        lift = lift_group(z2_z4)
        assert lift.project(GroupElem((3, 13))) == GroupElem((1, 1))
        assert lift.section(GroupElem((1, 3))) == GroupElem((1, 3))
        with pytest.raises(InvalidInputError):
            lift.project(GroupElem((4, 0)))

    def test_rejects_other_covers(self, z2_z4):
        with pytest.raises(InvalidInputError):
            GroupLift(z2_z4, FinAbGroup((4, 8)))

    def test_pullback_is_a_cocycle(self, z2_z4):
        spec = CocycleSpec(z2_z4, (1, 2), {(0, 1): 1})
        pulled = pullback_cochain(RepresentativeCocycle(spec), lift_group(z2_z4))
        assert pulled.group.moduli == (4, 16)
        assert pulled(GroupElem((3, 5)), GroupElem((1, 7)), GroupElem((2, 9))) == RepresentativeCocycle(spec)(
            GroupElem((1, 1)), GroupElem((1, 3)), GroupElem((0, 1))
        )


class TestResolvingCochain:
    def test_correction_coefficient(self):
        assert correction_coefficient(1, 2, 4) == 2
        assert correction_coefficient(0, 2, 4) == 0
        assert correction_coefficient(2, 3, 3) == 0

    def test_rank_one_value(self):
        spec = CocycleSpec(FinAbGroup((3,)), (1,))
        # a x (y - y mod 3) / 9 with x = 2, y = 4
        assert j_eval(spec, GroupElem((2,)), GroupElem((4,))) == Phase(6, 9)

    def test_needs_an_abelian_spec(self, nonabelian_z2_cubed):
        with pytest.raises(PreconditionError):
            ResolvingCochain(nonabelian_z2_cubed)

    def test_table_matches_pointwise(self, z2_z4):
        J = ResolvingCochain(CocycleSpec(z2_z4, (1, 3), {(0, 1): 1}))
        table = J.tabulate()
        elems = list(J.group.elements())
        for a in range(0, len(elems), 5):
            for b in range(len(elems)):
                assert table.phase_at((a, b)) == J(elems[a], elems[b])

    def test_coboundary_is_a_cocycle(self):
        J = ResolvingCochain(CocycleSpec(FinAbGroup((2, 2)), (1, 1), {(0, 1): 1}))
        assert is_cocycle(Coboundary3(J))


class TestVerifyResolution:
    @pytest.mark.parametrize("moduli", [(2,), (3,), (2, 2), (2, 4)])
    def test_every_abelian_spec_resolves(self, moduli):
        for spec in enumerate_specs(FinAbGroup(moduli)):
            report = verify_resolution(spec)
            assert report.resolved, spec.sequence()
            assert report.counterexample is None

    @pytest.mark.slow
    def test_every_abelian_spec_on_z3_z3_resolves(self):
        for spec in enumerate_specs(FinAbGroup((3, 3))):
            assert verify_resolution(spec).resolved

    def test_forced_representative_resolves(self, z2_z4):
        assert verify_resolution(CocycleSpec(z2_z4, (0, 1), {(0, 1): 3})).resolved

    def test_wrong_cochain_gives_a_counterexample(self, z2_z4):
        spec = CocycleSpec(z2_z4, (1, 0), {(0, 1): 1})
        report = verify_resolution(spec, j_spec=zero_spec(z2_z4))
        assert not report.resolved
        assert len(report.counterexample) == 3
        data = report.to_json()
        assert data["witness"] is None
        assert data["lifted_moduli"] == [4, 16]

    def test_report_json(self, z2_z4):
        data = verify_resolution(CocycleSpec(z2_z4, (1, 1))).to_json()
        assert data == {
            "moduli": [2, 4],
            "lifted_moduli": [4, 16],
            "abelian": True,
            "resolved": True,
            "witness": "J_a",
        }

    def test_rejects_non_abelian(self, nonabelian_z2_cubed):
        with pytest.raises(PreconditionError):
            verify_resolution(nonabelian_z2_cubed)

    def test_budget(self, z2_z4):
        with pytest.raises(BudgetExceededError):
            verify_resolution(CocycleSpec(z2_z4, (1, 1)), budget=1000)


class TestObstruction:
    def test_z2_cubed(self, nonabelian_z2_cubed):
        report = obstruction_check(nonabelian_z2_cubed)
        assert report.obstructed
        assert report.lifted_moduli == [4, 4, 4]
        assert report.f_rst == {"1,2,3": Phase(1, 2)}

    def test_z3_cubed(self):
        G = FinAbGroup((3, 3, 3))
        spec = CocycleSpec(G, (1, 0, 2), {(0, 2): 1}, {(0, 1, 2): 1})
        report = obstruction_check(spec)
        assert report.obstructed
        data = report.to_json()
        assert data["abelian"] is False
        assert data["f_rst"] == {"1,2,3": {"num": 1, "den": 3}}
        assert data["argument"]

    def test_every_nonabelian_spec_on_z2_cubed(self, z2_cubed):
        for spec in enumerate_specs(z2_cubed):
            if not spec.is_abelian:
                assert obstruction_check(spec).obstructed

    @pytest.mark.slow
    def test_every_nonabelian_spec_on_z3_cubed(self):
        specs = [s for s in enumerate_specs(FinAbGroup((3, 3, 3))) if not s.is_abelian]
        assert len(specs) == 1458
        for spec in specs:
            assert obstruction_check(spec).obstructed, spec.sequence()

    def test_rejects_abelian(self, z2_z4):
        with pytest.raises(PreconditionError):
            obstruction_check(zero_spec(z2_z4))
