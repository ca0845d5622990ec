"""Unit tests for exhaustive and sampled censuses."""

import pytest

from pcgraph.config.settings import reset_settings
from pcgraph.core.graph import parse_graph
from pcgraph.core.leaders import SizeGuardError, perfect_by_definition
from pcgraph.search import CSV_HEADER, CensusRow, census_chunk, merge_rows, pc_census, pc_census_async, random_census
from pcgraph.search.census import MAX_EXEMPLARS, all_pairs, graph_from_mask


class TestCensusRow:
    """Tests for the census record."""

    def test_inconsistent_counts_rejected(self) -> None:
        with pytest.raises(ValueError):
            CensusRow(n=3, total_graphs=2, connected_graphs=3, perfect_graphs=0)

    def test_csv_row(self) -> None:
        row = CensusRow(n=4, total_graphs=64, connected_graphs=38, perfect_graphs=12)
        assert CSV_HEADER == "n,total,connected,perfect"
        assert row.to_csv_row() == "4,64,38,12"
        assert row.fraction_perfect == pytest.approx(12 / 64)
        assert row.to_dict()["perfect"] == 12

    def test_empty_fraction(self) -> None:
        assert CensusRow(n=2).fraction_perfect == 0.0


class TestMasks:
    """Tests for the edge-mask encoding."""

    def test_pairs_are_lexicographic(self) -> None:
        assert all_pairs(3) == [(1, 2), (1, 3), (2, 3)]

    def test_mask_bits_select_pairs(self) -> None:
        graph = graph_from_mask(3, all_pairs(3), 0b101)
        assert graph.sorted_edges() == [(1, 2), (2, 3)]


class TestExhaustiveCensus:
    """Tests for the exhaustive labeled census."""

    def test_one_node(self) -> None:
        assert pc_census(1).to_csv_row() == "1,1,1,1"

    def test_two_nodes(self) -> None:
        assert pc_census(2).to_csv_row() == "2,2,1,1"

    def test_three_nodes_have_none(self) -> None:
        assert pc_census(3).to_csv_row() == "3,8,4,0"

    def test_four_nodes_are_the_labeled_paths(self) -> None:
        """Only the twelve labeled copies of P4 qualify on four nodes."""
        row = pc_census(4)
        assert row.to_csv_row() == "4,64,38,12"
        assert len(row.exemplars) == MAX_EXEMPLARS
        for text in row.exemplars:
            graph = parse_graph(text)
            assert graph.num_edges == 3
            assert graph.is_connected()
            assert max(graph.degree(v) for v in graph.nodes) == 2
            assert perfect_by_definition(graph, "exact")

    def test_five_node_exemplars_meet_the_definition(self) -> None:
        """Every leader subset of every reported exemplar is controllable."""
        row = pc_census(5, workers=1)
        assert row.exemplars
        for text in row.exemplars:
            assert perfect_by_definition(parse_graph(text), "exact")

    def test_chunks_merge_to_whole(self) -> None:
        total = 1 << 6
        parts = [census_chunk(4, 0, 20), census_chunk(4, 20, 50), census_chunk(4, 50, total)]
        assert merge_rows(parts).to_csv_row() == census_chunk(4, 0, total).to_csv_row()

    def test_worker_count_does_not_change_row(self) -> None:
        single = pc_census(4, workers=1)
        multi = pc_census(4, workers=2)
        assert multi.to_csv_row() == single.to_csv_row()
        assert multi.exemplars == single.exemplars

    def test_guard(self) -> None:
        with pytest.raises(SizeGuardError):
            pc_census(8)
        with pytest.raises(ValueError):
            pc_census(0)

    def test_guard_from_environment(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("PCGRAPH_CENSUS_GUARD", "3")
        reset_settings()
        with pytest.raises(SizeGuardError):
            pc_census(4)

    async def test_async_census(self) -> None:
        row = await pc_census_async(3)
        assert row.to_csv_row() == "3,8,4,0"


class TestRandomCensus:
    """Tests for the sampled census."""

    def test_same_seed_same_row(self) -> None:
        a = random_census(6, 0.5, 40, seed=7)
        b = random_census(6, 0.5, 40, seed=7)
        assert a.to_csv_row() == b.to_csv_row()
        assert a.exemplars == b.exemplars
        assert a.sampled and a.seed == 7 and a.edge_prob == 0.5

    def test_full_probability_gives_complete_graphs(self) -> None:
        row = random_census(5, 1.0, 10, seed=1)
        assert row.to_csv_row() == "5,10,10,0"

    def test_zero_probability_disconnects(self) -> None:
        row = random_census(5, 0.0, 10, seed=1)
        assert row.to_csv_row() == "5,10,0,0"

    def test_zero_samples(self) -> None:
        assert random_census(5, 0.5, 0, seed=3).to_csv_row() == "5,0,0,0"

    @pytest.mark.parametrize("prob", [-0.1, 1.5])
    def test_bad_probability(self, prob: float) -> None:
        with pytest.raises(ValueError):
            random_census(5, prob, 10, seed=1)

    def test_size_guard(self) -> None:
        with pytest.raises(SizeGuardError):
            random_census(65, 0.5, 1, seed=1)
