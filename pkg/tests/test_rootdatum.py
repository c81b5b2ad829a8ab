"""Tests for diagrams, root data, congruences and Yetter-Drinfeld modules."""

import pytest

from src.core import FinAbGroup, GroupElem, Phase
from src.errors import InvalidInputError, PreconditionError
from src.rootdatum import (
    GeneralizedDynkinDiagram,
    RootDatum,
    SupportGroup,
    braiding_matrix,
    braiding_of_yd,
    build_yd_module,
    check_congruences,
    determine_a,
    diagram_from_braiding,
    diagram_from_constants,
    is_cartan_type,
    solve_T,
    support_group,
    twist_equivalent,
    verify_root_datum,
)
from src.utils.validators import parse_datum

A2 = ((2, -1), (-1, 2))


def _diagram(q_ii, edges=None):
    return GeneralizedDynkinDiagram(
        tuple(Phase(n, d) for n, d in q_ii),
        {k: Phase(n, d) for k, (n, d) in (edges or {}).items()},
    )


@pytest.fixture
def a2_datum(a2_datum_json) -> RootDatum:
    return parse_datum(a2_datum_json)


@pytest.fixture
def shared_degree_datum() -> RootDatum:
    """Rank two over ``Z_3`` with both degrees equal to the generator of ``Z_9``."""
    return RootDatum(
        FinAbGroup((3,)),
        _diagram([(1, 9), (4, 9)], {(0, 1): (5, 9)}),
        ((1,), (1,)),
        ((1, 4),),
    )


class TestDiagram:
    def test_drops_trivial_edges(self):
        diagram = _diagram([(1, 3), (1, 3)], {(0, 1): (0, 1)})
        assert diagram.edges() == []
        assert not diagram.is_connected()

    def test_edge_is_symmetric(self):
        diagram = _diagram([(1, 9), (1, 9)], {(0, 1): (8, 9)})
        assert diagram.edge(1, 0) == diagram.edge(0, 1) == Phase(8, 9)
        assert diagram.is_connected()

    def test_constants_accept_either_orientation(self):
        diagram = diagram_from_constants([Phase(1, 9)] * 2, {(1, 0): Phase(8, 9)})
        assert diagram.q_tilde == {(0, 1): Phase(8, 9)}

    def test_constants_reject_asymmetric_edges(self):
        with pytest.raises(InvalidInputError):
            diagram_from_constants([Phase(1, 9)] * 2, {(0, 1): Phase(8, 9), (1, 0): Phase(1, 9)})
        with pytest.raises(InvalidInputError):
            diagram_from_constants([Phase(1, 9)] * 2, {(1, 1): Phase(8, 9)})

    def test_from_braiding(self):
        q = [[Phase(1, 9), Phase(8, 9)], [Phase(0, 1), Phase(1, 9)]]
        assert diagram_from_braiding(q) == _diagram([(1, 9), (1, 9)], {(0, 1): (8, 9)})

    def test_cartan_type(self):
        diagram = _diagram([(1, 9), (1, 9)], {(0, 1): (8, 9)})
        assert is_cartan_type(diagram, A2)
        assert not is_cartan_type(diagram, ((2, -2), (-1, 2)))

    def test_json(self):
        data = _diagram([(1, 9), (1, 9)], {(0, 1): (8, 9)}).to_json()
        assert data["q_tilde"] == {"1,2": {"num": 8, "den": 9}}


class TestTwistEquivalence:
    def test_identity(self):
        first = _diagram([(1, 9), (4, 9)], {(0, 1): (5, 9)})
        assert twist_equivalent(first, first) == (0, 1)

    def test_swap(self):
        first = _diagram([(1, 9), (4, 9)], {(0, 1): (5, 9)})
        second = _diagram([(4, 9), (1, 9)], {(0, 1): (5, 9)})
        assert twist_equivalent(first, second) == (1, 0)

    def test_path_relabelling(self):
        first = _diagram([(1, 3), (1, 5), (1, 7)], {(0, 1): (1, 2), (1, 2): (1, 4)})
        second = _diagram([(1, 7), (1, 3), (1, 5)], {(1, 2): (1, 2), (0, 2): (1, 4)})
        assert twist_equivalent(first, second) == (1, 2, 0)

    def test_not_equivalent(self):
        first = _diagram([(1, 9), (1, 9)], {(0, 1): (8, 9)})
        second = _diagram([(1, 9), (1, 9)], {(0, 1): (7, 9)})
        assert twist_equivalent(first, second) is None
        assert twist_equivalent(first, _diagram([(1, 9)])) is None

    def test_rank_bound(self):
        first = _diagram([(1, 9), (1, 9)])
        with pytest.raises(InvalidInputError):
            twist_equivalent(first, first, rank_bound=1)


class TestRootDatum:
    def test_shape_checks(self, a2_datum):
        with pytest.raises(InvalidInputError):
            RootDatum(a2_datum.base_group, a2_datum.diagram, ((1, 0),), a2_datum.X)
        with pytest.raises(InvalidInputError):
            RootDatum(a2_datum.base_group, a2_datum.diagram, a2_datum.S, ((1, 8),))

    def test_implied_diagram(self, a2_datum):
        assert a2_datum.lifted_moduli == (9, 9)
        assert a2_datum.braiding_constant(0, 1) == Phase(8, 9)
        assert a2_datum.braiding_constant(1, 0) == Phase(0, 1)
        assert a2_datum.implied_diagram() == a2_datum.diagram

    def test_solve_T(self, a2_datum):
        assert a2_datum.solved_T == ((1, 0), (0, 1))
        assert solve_T(((3, 0), (0, 1)), FinAbGroup((3, 3))) is None

    def test_json_includes_T(self, a2_datum):
        data = a2_datum.to_json()
        assert data["T"] == [[1, 0], [0, 1]]
        assert data["moduli"] == [3, 3]


class TestCongruences:
    def test_a2_forces_a(self, a2_datum):
        report = check_congruences(a2_datum.X, a2_datum.solved_T, a2_datum.base_group)
        assert report.holds
        assert report.a_l == [1, 1]
        assert report.a_ij == {(0, 1): 2}
        assert report.raw_form_consistent

    def test_vanishing_failure(self, a2_datum):
        report = check_congruences(((1, 8), (1, 1)), a2_datum.solved_T, a2_datum.base_group)
        assert not report.holds
        assert report.failures == [(1, 0, 1)]
        assert report.to_json()["failures"] == [{"i": 2, "l": 1, "value": 1}]

    def test_needs_invariant_factor_form(self):
        with pytest.raises(PreconditionError):
            check_congruences(((1, 0), (0, 1)), ((1, 0), (0, 1)), FinAbGroup((9, 3)))

    def test_determine_a(self, a2_datum):
        spec = determine_a(a2_datum)
        assert spec.sequence() == (1, 1, 2)

    def test_determine_a_when_congruences_fail(self, a2_datum):
        broken = RootDatum(a2_datum.base_group, a2_datum.diagram, a2_datum.S, ((1, 8), (1, 1)))
        assert determine_a(broken) is None

    def test_determine_a_needs_generating_degrees(self, a2_datum):
        datum = RootDatum(a2_datum.base_group, a2_datum.diagram, ((3, 0), (0, 1)), a2_datum.X)
        with pytest.raises(PreconditionError):
            determine_a(datum)

    def test_both_inverses_force_the_same_a(self, shared_degree_datum):
        assert shared_degree_datum.solved_T == ((0, 1),)
        other = shared_degree_datum.with_T(((1, 0),))
        assert determine_a(shared_degree_datum) == determine_a(other)
        assert determine_a(other).a_l == (1,)

    def test_supplied_T_must_invert_S(self, shared_degree_datum):
        with pytest.raises(InvalidInputError):
            shared_degree_datum.with_T(((1, 1),))


class TestYDModule:
    def test_descends_and_round_trips(self, a2_datum):
        module = build_yd_module(a2_datum)
        assert module.descends()
        assert module.descent_defects() == []
        assert braiding_matrix(module) == [[Phase(1, 9), Phase(8, 9)], [Phase(0, 1), Phase(1, 9)]]
        assert braiding_of_yd(module) == a2_datum.diagram

    def test_action_on_generators(self, a2_datum):
        module = build_yd_module(a2_datum)
        assert module.action[0] == (Phase(1, 9), Phase(8, 9))
        assert module.act(GroupElem((3, 0)), 1) == Phase(0, 1)

    def test_shared_degrees(self, shared_degree_datum):
        module = build_yd_module(shared_degree_datum)
        assert module.descends()
        assert braiding_of_yd(module) == shared_degree_datum.diagram
        support = support_group(module)
        assert support.is_full
        assert support.generators == ((1,),)

    def test_support_subgroup_json(self):
        support = SupportGroup(FinAbGroup((9,)), ((3,),), 3)
        assert (support.index, support.is_full) == (3, False)
        assert support.to_json() == {
            "ambient_moduli": [9],
            "generators": [[3]],
            "order": 3,
            "index": 3,
            "is_full": False,
        }

    def test_json(self, a2_datum):
        data = build_yd_module(a2_datum).to_json()
        assert data["lifted_moduli"] == [9, 9]
        assert data["degrees"] == [{"exp": [1, 0]}, {"exp": [0, 1]}]
        assert data["descends"] is True

    def test_needs_forced_parameters(self, a2_datum):
        broken = RootDatum(a2_datum.base_group, a2_datum.diagram, a2_datum.S, ((1, 8), (1, 1)))
        with pytest.raises(PreconditionError):
            build_yd_module(broken)


class TestVerifyRootDatum:
    def test_a2_holds(self, a2_datum):
        report = verify_root_datum(a2_datum, require_connected=True)
        assert report.holds, report.failed()
        assert list(report.checks) == [
            "bounds", "invariant_factor", "inverse", "structure_constants",
            "congruences", "descent", "connected",
        ]
        assert report.spec.sequence() == (1, 1, 2)

    def test_shared_degrees_hold(self, shared_degree_datum):
        assert verify_root_datum(shared_degree_datum).holds

    def test_structure_constant_mismatch(self, a2_datum):
        wrong = RootDatum(a2_datum.base_group, _diagram([(1, 9), (2, 9)], {(0, 1): (8, 9)}), a2_datum.S, a2_datum.X)
        report = verify_root_datum(wrong)
        assert report.failed() == ["structure_constants"]
        assert report.checks["structure_constants"].details[0]["i"] == 2

    def test_bounds(self, a2_datum):
        wrong = RootDatum(a2_datum.base_group, a2_datum.diagram, a2_datum.S, ((10, 8), (0, 1)))
        report = verify_root_datum(wrong)
        assert not report.checks["bounds"].holds
        assert report.checks["bounds"].details[0]["matrix"] == "X"

    def test_non_generating_degrees_skip_later_checks(self, a2_datum):
        datum = RootDatum(a2_datum.base_group, a2_datum.diagram, ((3, 0), (0, 1)), a2_datum.X)
        report = verify_root_datum(datum)
        assert not report.checks["inverse"].holds
        assert report.checks["congruences"].skipped
        assert report.checks["descent"].skipped
        assert report.to_json()["a"] is None

    def test_disconnected(self):
        datum = RootDatum(
            FinAbGroup((3, 3)),
            _diagram([(1, 9), (1, 9)]),
            ((1, 0), (0, 1)),
            ((1, 0), (0, 1)),
        )
        report = verify_root_datum(datum, require_connected=True)
        assert report.failed() == ["connected"]
        assert verify_root_datum(datum).holds
