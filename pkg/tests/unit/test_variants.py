"""Unit tests for stage-by-stage variant enumeration."""

import pytest

from pcgraph.construct import (
    ConstructionVariant,
    InapplicableStageError,
    PairScheme,
    Stage,
    add_intra_pair_edges,
    enumerate_variants,
    init_scheme,
    load_script,
    run_script,
    satellite_patterns,
    step7_batch,
    verify_variants,
)
from pcgraph.core.graph import Graph, load_graph
from pcgraph.data import PINNED_BASE, STEPS_1_3_SCRIPT


@pytest.fixture
def base() -> Graph:
    return load_graph(PINNED_BASE)


@pytest.fixture
def after_step2(base: Graph) -> tuple[PairScheme, Graph]:
    """Pairs 1, 2 and 4 joined, no cross edge yet."""
    scheme = init_scheme(4)
    return scheme, add_intra_pair_edges(scheme, base, [1, 2, 4])


@pytest.fixture
def after_step3(base: Graph) -> tuple[PairScheme, Graph]:
    run = run_script(load_script(STEPS_1_3_SCRIPT, base))
    assert run.scheme is not None
    return run.scheme, run.graph


def _labels(variants: list[ConstructionVariant]) -> list[str]:
    return [v.label for v in variants]


class TestStep3:
    """Tests for the choice of the first cross edge."""

    def test_four_legal_cross_edges(self, after_step2, base: Graph) -> None:
        scheme, graph = after_step2
        variants = enumerate_variants(scheme, graph, "step3", base=base)
        assert _labels(variants) == ["e2,7", "e3,6", "e3,8", "e4,7"]

    def test_cross_edge_fixes_its_pairs(self, after_step2, base: Graph) -> None:
        scheme, graph = after_step2
        variant = enumerate_variants(scheme, graph, Stage.STEP3, base=base)[-1]
        assert variant.scheme.fixed_pairs() == (3, 4)
        assert variant.graph.has_edge(4, 7)
        assert variant.violations == ()

    def test_needs_an_open_pair(self, after_step2, base: Graph) -> None:
        scheme, graph = after_step2
        closed = add_intra_pair_edges(scheme, graph, [3])
        with pytest.raises(InapplicableStageError):
            enumerate_variants(scheme, closed, "step3", base=base)


class TestStep4:
    """Tests for the three step-4 alternatives."""

    def test_step4a_two_cross_edges(self, after_step3, base: Graph) -> None:
        scheme, graph = after_step3
        variants = enumerate_variants(scheme, graph, "step4a", base=base)
        assert _labels(variants) == ["e1,6", "e2,5"]

    def test_step4b_six_satellites(self, after_step3, base: Graph) -> None:
        scheme, graph = after_step3
        variants = enumerate_variants(scheme, graph, "step4b", base=base)
        assert len(variants) == 6
        assert [v.ops[0].attach for v in variants] == [(1, 2), (5, 6), (1, 6), (2, 5), (1, 5), (2, 6)]
        assert all(v.graph.n == 9 for v in variants)

    def test_step4c_four_satellites(self, after_step3, base: Graph) -> None:
        scheme, graph = after_step3
        variants = enumerate_variants(scheme, graph, "step4c", base=base)
        assert [v.ops[0].attach for v in variants] == [(1, 5, 2), (1, 5, 6), (2, 6, 1), (2, 6, 5)]

    def test_satellite_patterns(self, after_step3) -> None:
        scheme, _ = after_step3
        assert satellite_patterns(scheme) == [(1, 2), (5, 6), (1, 6), (2, 5), (1, 5), (2, 6)]

    def test_fixed_pairs_inferred_from_lone_cross_edge(self, after_step3, base: Graph) -> None:
        """Without declared fixed pairs the single cross edge decides them."""
        scheme, graph = after_step3
        unfixed = init_scheme(4)
        assert _labels(enumerate_variants(unfixed, graph, "step4a", base=base)) == ["e1,6", "e2,5"]
        assert scheme.fixed_pairs() == (3, 4)

    def test_step4a_without_cross_edge(self, after_step2, base: Graph) -> None:
        scheme, graph = after_step2
        with pytest.raises(InapplicableStageError):
            enumerate_variants(scheme, graph, "step4a", base=base)


class TestLaterStages:
    """Tests for steps 5 to 7."""

    def test_step5_twelve_variants(self, after_step3, base: Graph) -> None:
        scheme, graph = after_step3
        variants = enumerate_variants(scheme, graph, "step5", base=base)
        assert len(variants) == 12
        assert variants[0].ops[0].to_line() == "cross 1 6"
        assert variants[0].ops[1].to_line() == "sat 1 2"

    def test_step6_from_step4c(self, after_step3, base: Graph) -> None:
        scheme, graph = after_step3
        variants = enumerate_variants(scheme, graph, "step6", base=base)
        assert len(variants) == 2
        assert all("+e" in v.label for v in variants)
        assert all(v.graph.n == 9 for v in variants)

    def test_step7_eight_variants(self, after_step3, base: Graph) -> None:
        scheme, graph = after_step3
        start = enumerate_variants(scheme, graph, "step5", base=base)[0]
        variants = enumerate_variants(start.scheme, start.graph, "step7", base=base)
        assert len(variants) == 8
        assert _labels(variants) == list("abcdefgh")
        assert variants[0].ops[0].attach == (3, 4)
        assert variants[3].ops[0].attach == (7, 8)
        assert variants[6].ops[0].attach == (3, 4, 7)
        assert variants[7].ops[0].attach == (7, 8, 4)
        assert all(v.graph.n == 10 for v in variants)

    def test_step7_needs_two_fixed_pairs(self, after_step2, base: Graph) -> None:
        scheme, graph = after_step2
        with pytest.raises(InapplicableStageError):
            enumerate_variants(scheme, graph, "step7", base=base)


class TestEnumeration:
    """Tests for the shared enumeration entry point."""

    def test_unknown_stage(self, after_step3, base: Graph) -> None:
        scheme, graph = after_step3
        with pytest.raises(InapplicableStageError, match="unknown stage"):
            enumerate_variants(scheme, graph, "step9", base=base)

    def test_scheme_must_cover_graph(self, after_step3, base: Graph) -> None:
        scheme, graph = after_step3
        with pytest.raises(InapplicableStageError):
            enumerate_variants(scheme, graph.add_nodes(1), "step4a", base=base)

    def test_variants_are_distinct(self, after_step3, base: Graph) -> None:
        scheme, graph = after_step3
        for stage in Stage:
            if stage is Stage.STEP3 or stage is Stage.STEP7:
                continue
            variants = enumerate_variants(scheme, graph, stage, base=base)
            assert len({v.graph for v in variants}) == len(variants)

    def test_verify_attaches_exact_verdict(self, after_step3, base: Graph) -> None:
        scheme, graph = after_step3
        variants = enumerate_variants(scheme, graph, "step4a", base=base)
        assert all(v.perfect is None for v in variants)
        verified = verify_variants(variants)
        assert all(isinstance(v.perfect, bool) for v in verified)
        assert verified[0].describe().startswith("(e1,6) cross 1 6 -> ")


class TestStep7Batch:
    """Tests for step 7 over every graph of earlier stages."""

    def test_single_source_stage(self, after_step3, base: Graph) -> None:
        scheme, graph = after_step3
        batch = step7_batch(scheme, graph, base=base, sources=("step4a",))
        assert batch.source_count == 2
        assert len(batch.rows) == 16
        assert [r.label for r in batch.rows[:8]] == list("abcdefgh")
        assert all(r.graph.n == 9 for r in batch.rows)
        assert all(r.source_stage is Stage.STEP4A for r in batch.rows)

    def test_rows_match_per_source_enumeration(self, after_step3, base: Graph) -> None:
        scheme, graph = after_step3
        batch = step7_batch(scheme, graph, base=base, sources=("step4a",))
        source = enumerate_variants(scheme, graph, "step4a", base=base)[0]
        direct = verify_variants(enumerate_variants(source.scheme, source.graph, "step7", base=base))
        assert [(r.label, r.perfect) for r in batch.rows[:8]] == [(v.label, v.perfect) for v in direct]

    def test_render_table(self, after_step3, base: Graph) -> None:
        scheme, graph = after_step3
        batch = step7_batch(scheme, graph, base=base, sources=("step4a",))
        lines = batch.render().splitlines()
        assert lines[0].startswith("# step7 batch: 2 source graph(s), 16 extension(s), ")
        assert lines[1].split() == ["source", "source", "verdict", "variant", "verdict"]
        assert lines[2].split()[0] == "step4a:e1,6"
        assert lines[2].split()[2] == "a"
        assert len(lines) == 18

    def test_inapplicable_source(self, after_step2, base: Graph) -> None:
        scheme, graph = after_step2
        with pytest.raises(InapplicableStageError):
            step7_batch(scheme, graph, base=base)
