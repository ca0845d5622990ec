"""Unit tests for double node sets, the schematic layout and the edge rules."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pcgraph.construct import (
    PairScheme,
    Rule,
    SchemeError,
    add_intra_pair_edges,
    add_satellite,
    check_no_crossing,
    init_scheme,
    schematic_edges,
    segments_cross,
    validate_cross_edge,
)
from pcgraph.core.graph import Graph, GraphError
from tests.utils.strategies import graphs


@pytest.fixture
def scheme() -> PairScheme:
    return init_scheme(4)


@pytest.fixture
def joined(scheme: PairScheme) -> Graph:
    """Eight nodes with pairs 1, 2 and 4 joined."""
    return add_intra_pair_edges(scheme, Graph.empty(8), [1, 2, 4])


class TestPairScheme:
    """Tests for the scheme model."""

    def test_groups_and_pairs(self, scheme: PairScheme) -> None:
        assert scheme.omega1 == (1, 2, 3, 4)
        assert scheme.omega2 == (5, 6, 7, 8)
        assert scheme.pairs == ((1, 5), (2, 6), (3, 7), (4, 8))
        assert scheme.node_count == 8

    def test_group_and_pair_lookup(self, scheme: PairScheme) -> None:
        assert scheme.group(3) == 1
        assert scheme.group(7) == 2
        assert scheme.group(9) is None
        assert scheme.pair_of(7) == 3
        assert scheme.pair_of(9) is None

    def test_init_rejects_zero(self) -> None:
        with pytest.raises(SchemeError):
            init_scheme(0)

    def test_fixed_flags(self, scheme: PairScheme) -> None:
        fixed = scheme.mark_fixed(3, 4)
        assert fixed.fixed_pairs() == (3, 4)
        assert fixed.unfixed_pairs() == (1, 2)
        assert scheme.fixed_pairs() == ()

    def test_mark_fixed_rejects_unknown_pair(self, scheme: PairScheme) -> None:
        with pytest.raises(SchemeError):
            scheme.mark_fixed(5)

    def test_coordinates(self, scheme: PairScheme) -> None:
        assert scheme.coords(2) == (2.0, 1.0)
        assert scheme.coords(6) == (2.0, 0.0)
        with pytest.raises(SchemeError):
            scheme.coords(9)

    def test_default_satellite_positions_alternate(self, scheme: PairScheme) -> None:
        """First satellite to the left, second to the right, then further out."""
        grown = scheme.with_satellite().with_satellite().with_satellite()
        assert grown.coords(9) == (0.0, 0.5)
        assert grown.coords(10) == (5.0, 0.5)
        assert grown.coords(11) == (-1.0, 0.5)
        assert grown.node_count == 11

    def test_flag_count_validated(self) -> None:
        with pytest.raises(ValueError):
            PairScheme(k=2, fixed_flags=(False,))


class TestSegmentsCross:
    """Tests for the open-segment intersection predicate."""

    def test_proper_crossing(self) -> None:
        assert segments_cross((0, 0), (2, 2), (0, 2), (2, 0))

    def test_shared_endpoint_does_not_count(self) -> None:
        assert not segments_cross((0, 0), (1, 1), (1, 1), (2, 0))

    def test_parallel(self) -> None:
        assert not segments_cross((0, 0), (1, 0), (0, 1), (1, 1))

    def test_collinear_overlap(self) -> None:
        assert segments_cross((0, 0), (2, 0), (1, 0), (3, 0))

    def test_collinear_touching(self) -> None:
        assert not segments_cross((0, 0), (1, 0), (1, 0), (2, 0))

    def test_t_junction_inside_segment(self) -> None:
        """An endpoint lying in the interior of the other segment is not a proper crossing."""
        assert not segments_cross((0, 0), (2, 0), (1, 0), (1, 1))


class TestEdgeRules:
    """Tests for the three cross-edge rules."""

    def test_same_group_violates_rule_i(self, scheme: PairScheme, joined: Graph) -> None:
        violation = validate_cross_edge(scheme, joined, 1, 2)
        assert violation is not None
        assert violation.rule is Rule.DIFFERENT_GROUPS
        assert violation.code == "violation:i"

    def test_same_pair_violates_rule_ii(self, scheme: PairScheme, joined: Graph) -> None:
        violation = validate_cross_edge(scheme, joined, 3, 7)
        assert violation is not None
        assert violation.rule is Rule.DIFFERENT_PAIRS

    def test_crossing_violates_rule_iii(self, scheme: PairScheme, joined: Graph) -> None:
        """3-5 runs from (3, 1) to (1, 0) over the vertical edge of pair 2."""
        violation = validate_cross_edge(scheme, joined, 3, 5)
        assert violation is not None
        assert violation.rule is Rule.NO_CROSSING
        assert violation.blocking_edge == (2, 6)
        assert violation.describe() == "edge 3-5 crosses edge 2-6"

    def test_legal_edge(self, scheme: PairScheme, joined: Graph) -> None:
        assert validate_cross_edge(scheme, joined, 4, 7) is None

    def test_base_edges_are_not_drawn(self, scheme: PairScheme, joined: Graph) -> None:
        base = Graph.from_edges(8, [(2, 6)])
        assert schematic_edges(joined, base) == [(1, 5), (4, 8)]
        assert validate_cross_edge(scheme, joined, 3, 5, base) is None

    def test_satellite_endpoint_rejected(self, scheme: PairScheme, joined: Graph) -> None:
        with pytest.raises(SchemeError):
            validate_cross_edge(scheme, joined, 1, 9)

    @settings(max_examples=60, deadline=None, derandomize=True)
    @given(graph=graphs(min_nodes=8, max_nodes=8), data=st.data())
    def test_crossing_check_is_symmetric(self, graph: Graph, data: st.DataObject) -> None:
        scheme = init_scheme(4)
        u = data.draw(st.sampled_from(scheme.omega1))
        v = data.draw(st.sampled_from([w for w in scheme.omega2 if scheme.pair_of(w) != u]))
        assert validate_cross_edge(scheme, graph, u, v) == validate_cross_edge(scheme, graph, v, u)

    @settings(max_examples=60, deadline=None, derandomize=True)
    @given(graph=graphs(min_nodes=8, max_nodes=8), data=st.data())
    def test_edges_at_an_endpoint_never_block(self, graph: Graph, data: st.DataObject) -> None:
        scheme = init_scheme(4)
        u = data.draw(st.sampled_from(scheme.omega1))
        v = data.draw(st.sampled_from([w for w in scheme.omega2 if scheme.pair_of(w) != u]))
        end = data.draw(st.sampled_from((u, v)))
        others = [w for w in graph.nodes if w not in (u, v) and not graph.has_edge(end, w)]
        before = validate_cross_edge(scheme, graph, u, v)
        if others:
            w = data.draw(st.sampled_from(others))
            assert validate_cross_edge(scheme, graph.add_edge(end, w), u, v) == before


class TestGraphOperations:
    """Tests for intra-pair edges and satellites."""

    def test_intra_pair_edges(self, joined: Graph) -> None:
        assert joined.sorted_edges() == [(1, 5), (2, 6), (4, 8)]

    def test_duplicate_intra_pair_edge(self, scheme: PairScheme, joined: Graph) -> None:
        with pytest.raises(GraphError):
            add_intra_pair_edges(scheme, joined, [2])

    def test_add_satellite(self, scheme: PairScheme, joined: Graph) -> None:
        grown_scheme, grown = add_satellite(scheme, joined, [1, 2])
        assert grown.n == 9
        assert grown.neighbors(9) == (1, 2)
        assert grown_scheme.coords(9) == (0.0, 0.5)

    def test_satellite_crossing_check(self, scheme: PairScheme, joined: Graph) -> None:
        """From (0, 0.5) the edge to node 2 passes over pair 1."""
        grown_scheme, grown = add_satellite(scheme, joined, [1, 2])
        assert check_no_crossing(grown_scheme, grown, 9, 1) is None
        violation = check_no_crossing(grown_scheme, grown, 9, 2)
        assert violation is not None
        assert violation.blocking_edge == (1, 5)

    def test_satellite_custom_coordinate(self, scheme: PairScheme, joined: Graph) -> None:
        grown_scheme, _ = add_satellite(scheme, joined, [1], coord=(1.5, 2.0))
        assert grown_scheme.coords(9) == (1.5, 2.0)

    def test_satellite_needs_attach_nodes(self, scheme: PairScheme, joined: Graph) -> None:
        with pytest.raises(SchemeError):
            add_satellite(scheme, joined, [])

    def test_satellite_size_mismatch(self, scheme: PairScheme) -> None:
        with pytest.raises(SchemeError):
            add_satellite(scheme, Graph.empty(7), [1])
