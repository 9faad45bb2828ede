import random
import pytest

import coloring.builder

from coloring.verifier import is_rainbow_connected
from graph.core import find_bridges, radius_center
from graph.layers import is_k_step_dominating
from graph.models import Graph
from utils.exceptions import DisconnectedGraphError


def test_build_single_edge():
    result = coloring.builder.build(Graph.from_edges([(0, 1)]))

    assert result.radius == 1
    assert result.stages[0].b_k == 1
    assert result.bound == 3
    assert result.colors_used == 1
    assert result.coloring.assignment == {(0, 1): 1}


def test_build_star(star5):
    result = coloring.builder.build(star5)

    assert result.radius == 1
    assert result.center == 0
    assert result.stages[0].b_k == 5
    assert result.bound == 5
    assert result.colors_used == 5


def test_build_path(p5):
    result = coloring.builder.build(p5)

    assert result.radius == 2
    assert [stage.k for stage in result.stages] == [2, 1]
    assert [stage.b_k for stage in result.stages] == [2, 2]
    assert result.bound == 8
    assert result.colors_used == 4
    assert len(set(result.coloring.assignment.values())) == 4


def test_build_trivial_graphs():
    single = coloring.builder.build(Graph(n=1))
    assert (single.bound, single.colors_used, single.center) == (0, 0, 0)

    with pytest.raises(DisconnectedGraphError):
        coloring.builder.build(Graph.from_edges([(0, 1), (2, 3)]))


def test_palette_blocks_are_disjoint(p5):
    result = coloring.builder.build(p5)
    blocks = result.coloring.palette_blocks

    assert [(b.stage, b.start, b.size) for b in blocks] == [(2, 1, 5), (1, 6, 3)]


@pytest.mark.parametrize(
    "edges,bound,b",
    [
        ([(i, (i + 1) % 9) for i in range(9)], 24, [0, 0, 0, 0]),
        ([(0, leaf) for leaf in range(1, 8)], 7, [7]),
        ([(0, 1), (1, 2), (2, 3), (3, 4)], 8, [2, 2]),
    ],
)
def test_theorem2_bound(edges, bound, b):
    assert coloring.builder.theorem2_bound(Graph.from_edges(edges)) == (bound, b)


def test_corollary1_examples(p5, c6, star5):
    for g in (p5, c6, star5):
        result = coloring.builder.build(g)
        assert coloring.builder.corollary1_check(g, result.stages)


def test_bound_regime(c6, star5):
    assert coloring.builder.bound_regime(coloring.builder.build(c6).stages) == "bridgeless-like"
    assert coloring.builder.bound_regime(coloring.builder.build(star5).stages) == "bridge-dominated"

    spider = Graph.from_edges([(0, leaf) for leaf in range(1, 7)] + [(1, 7)])
    assert coloring.builder.bound_regime(coloring.builder.build(spider).stages) == "mixed"


def test_corpus_bound_and_verifier(built):
    assert len(built) >= 200

    for spec, g, result in built:
        bound, b = coloring.builder.theorem2_bound(g)

        assert result.bound == bound, spec.name
        assert [stage.b_k for stage in reversed(result.stages)] == b, spec.name
        assert result.colors_used <= bound, spec.name
        assert set(result.coloring.assignment) == set(g.edges), spec.name
        assert is_rainbow_connected(g, result.coloring).ok, spec.name


def test_corpus_bridgeless_regime(built):
    for spec, g, result in built:
        if not find_bridges(g):
            r = result.radius
            assert result.colors_used <= r * (r + 2), spec.name


def test_corpus_corollary1(built):
    for spec, g, result in built:
        assert coloring.builder.corollary1_check(g, result.stages), spec.name
        assert {e for stage in result.stages for e in stage.bridges} == find_bridges(g), spec.name


def test_corpus_stage_invariants(built):
    for spec, g, result in built:
        previous = None

        for stage in result.stages:
            assert stage.colors_used <= stage.budget, spec.name
            assert stage.warnings == [], spec.name

            for ear in stage.ears:
                assert ear.length <= 2 * stage.k + 1, spec.name

            dominating, connected = is_k_step_dominating(g, stage.d_out, stage.k - 1)
            assert dominating and connected, spec.name

            if previous is not None:
                assert previous == stage.d_in, spec.name
            assert set(stage.d_in) <= set(stage.d_out), spec.name

            previous = stage.d_out

        assert previous == list(g.vertices), spec.name


def test_build_is_deterministic(corpus):
    for spec, g in corpus[::10]:
        first = coloring.builder.build(g)
        second = coloring.builder.build(g)

        assert first.coloring.assignment == second.coloring.assignment, spec.name
        assert first.model_dump() == second.model_dump(), spec.name


def _relabel_keeping_center_order(g: Graph, centers: list[int], rng: random.Random) -> list[int]:
    perm = list(g.vertices)
    rng.shuffle(perm)

    for c, image in zip(centers, sorted(perm[c] for c in centers)):
        perm[c] = image

    return perm


def test_relabelling_keeps_center_and_bound(built):
    rng = random.Random(11)

    for spec, g, result in built:
        perm = _relabel_keeping_center_order(g, radius_center(g).centers, rng)
        h = Graph.from_edges([(perm[u], perm[v]) for u, v in g.edges], n=g.n)
        relabelled = coloring.builder.build(h)

        assert relabelled.center == perm[result.center], spec.name
        assert relabelled.radius == result.radius, spec.name
        assert relabelled.bound == result.bound, spec.name
        assert [s.b_k for s in relabelled.stages] == [s.b_k for s in result.stages], spec.name

        if find_bridges(g) == set(g.edges):
            assert relabelled.colors_used == result.colors_used == g.m, spec.name
