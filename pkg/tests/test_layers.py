import pytest

import graph.layers

from graph.core import radius_center
from graph.models import Graph
from utils.exceptions import InvalidGraphError


def test_k_step_neighborhood(c6, p5):
    assert graph.layers.k_step_neighborhood(c6, {0, 3}, 0) == {0, 3}
    assert graph.layers.k_step_neighborhood(c6, {0}, 2) == {2, 4}
    assert graph.layers.k_step_neighborhood(p5, {2}, 2) == {0, 4}
    assert graph.layers.k_step_neighborhood(p5, {2}, 3) == set()


def test_k_step_neighborhood_rejects_bad_input(c6):
    with pytest.raises(InvalidGraphError):
        graph.layers.k_step_neighborhood(c6, set(), 1)

    with pytest.raises(InvalidGraphError):
        graph.layers.k_step_neighborhood(c6, {0}, -1)

    with pytest.raises(InvalidGraphError):
        graph.layers.k_step_neighborhood(c6, {6}, 1)


def test_decompose(c6, star5):
    layers = graph.layers.decompose(c6, {0})
    assert layers.layers == [{0}, {1, 5}, {2, 4}, {3}]
    assert layers.step == 3
    assert layers.layer_of(4) == 2

    layers = graph.layers.decompose(c6, range(6))
    assert layers.layers == [set(range(6))]
    assert layers.step == 0

    layers = graph.layers.decompose(star5, {0})
    assert layers.layers == [{0}, {1, 2, 3, 4, 5}]


def test_decompose_partitions_and_links_layers(corpus):
    for spec, g in corpus:
        layers = graph.layers.decompose(g, {0})

        assert set().union(*layers.layers) == set(g.vertices), spec.name
        assert sum(len(layer) for layer in layers.layers) == g.n, spec.name

        for i in range(1, len(layers.layers)):
            for v in layers.layers[i]:
                assert any(w in layers.layers[i - 1] for w in g.neighbors(v)), spec.name


def test_decompose_rejects_disconnected():
    with pytest.raises(InvalidGraphError):
        graph.layers.decompose(Graph.from_edges([(0, 1), (2, 3)]), {0})


@pytest.mark.parametrize(
    "vertices,k,expected",
    [
        ({0}, 3, (True, True)),
        ({0}, 2, (False, True)),
        ({0, 3}, 1, (True, False)),
        (range(6), 0, (True, True)),
    ],
)
def test_is_k_step_dominating_c6(c6, vertices, k, expected):
    assert graph.layers.is_k_step_dominating(c6, vertices, k) == expected


def test_is_k_step_dominating_p5(p5):
    assert graph.layers.is_k_step_dominating(p5, {1, 2, 3}, 1) == (True, True)
    assert graph.layers.is_k_step_dominating(p5, {1, 3}, 1) == (True, False)


def test_center_dominates_within_radius(corpus):
    for spec, g in corpus:
        metrics = radius_center(g)

        for c in metrics.centers:
            within = graph.layers.is_k_step_dominating(g, {c}, metrics.radius)
            short = graph.layers.is_k_step_dominating(g, {c}, metrics.radius - 1)

            assert within == (True, True), spec.name
            assert short == (False, True), spec.name
