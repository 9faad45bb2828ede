import pytest

import coloring.ears

from coloring.models import Coloring, Orientation, SegmentSide
from graph.generators import Family, FamilySpec, generate
from graph.layers import decompose
from graph.models import Graph
from utils.exceptions import ConstructionError, InvalidGraphError


@pytest.mark.parametrize(
    "p,k,orientation,expected",
    [
        (5, 2, Orientation.ASCENDING, [1, 2, 3, 4, 5]),
        (6, 3, Orientation.ASCENDING, [1, 2, 3, 5, 6, 7]),
        (3, 1, Orientation.DESCENDING, [3, 2, 1]),
        (1, 4, Orientation.ASCENDING, [1]),
        (4, 2, Orientation.DESCENDING, [5, 4, 2, 1]),
    ],
)
def test_even_color_sequence(p, k, orientation, expected):
    assert coloring.ears.even_color_sequence(p, k, orientation) == expected


def test_even_color_sequence_is_distinct_within_palette():
    for k in range(1, 8):
        for p in range(1, 2 * k + 2):
            for orientation in Orientation:
                sequence = coloring.ears.even_color_sequence(p, k, orientation)
                assert len(set(sequence)) == p
                assert all(1 <= c <= 2 * k + 1 for c in sequence)


def test_even_color_sequence_rejects_long_ears():
    with pytest.raises(ConstructionError):
        coloring.ears.even_color_sequence(6, 2, Orientation.ASCENDING)


def test_bridge_frontier(star5, c6, p5):
    frontier = coloring.ears.bridge_frontier(star5, {0})
    assert frontier.vertices == [1, 2, 3, 4, 5]
    assert frontier.size == 5

    assert coloring.ears.bridge_frontier(c6, {0}).size == 0

    frontier = coloring.ears.bridge_frontier(p5, {2})
    assert frontier.vertices == [1, 3]
    assert frontier.bridges == [(1, 2), (3, 2)]


def test_bridge_frontier_degree_one_in_closed_neighborhood(corpus):
    for spec, g in corpus:
        core = {0}
        while len(core) < g.n:
            frontier = coloring.ears.bridge_frontier(g, core)
            closed = set(core).union(*(g.neighbors(v) for v in core))

            for x in frontier.vertices:
                assert sum(w in closed for w in g.neighbors(x)) == 1, spec.name

            core = closed


def _ear(g, core, seed):
    layers = decompose(g, core)
    return coloring.ears.find_eager_ear(g, core, layers, seed, coloring.ears.EarRegistry())


def test_eager_ear_examples(c5):
    assert _ear(c5, {0}, (0, 1)).vertices == [0, 1, 2, 3, 4, 0]

    triangle = Graph.from_edges([(0, 1), (1, 2), (0, 2)])
    ear = _ear(triangle, {0}, (0, 1))
    assert ear.vertices == [0, 1, 2, 0]
    assert ear.closed

    # junctions 0 and 1, arms 0-2-1 and 0-3-4-1
    theta = generate(FamilySpec(family=Family.THETA, arms=[2, 3]))
    ear = _ear(theta, {0}, (0, 2))
    assert ear.vertices == [0, 2, 1, 4, 3, 0]
    assert ear.length == 5


def test_eager_ear_open_ear(c6):
    ear = _ear(c6, {0, 1}, (1, 2))
    assert ear.vertices == [1, 2, 3, 4, 5, 0]
    assert not ear.closed
    assert ear.internal == [2, 3, 4, 5]


def test_eager_ear_rejects_bad_seed(c6):
    with pytest.raises(InvalidGraphError):
        _ear(c6, {0}, (1, 2))


def test_eager_ear_splices_into_host(kite):
    layers = decompose(kite, {0})
    frontier = coloring.ears.bridge_frontier(kite, {0})
    first, second = coloring.ears.iter_stage_ears(kite, layers, frontier)

    assert first.vertices == [0, 1, 2, 3, 0]
    assert first.splice is None
    assert first.new_vertices == [1, 2, 3]

    assert second.vertices == [0, 4, 2, 3, 0]
    assert second.splice.host == first.id
    assert second.splice.prefix_length == 2
    assert second.splice.side == SegmentSide.TAIL
    assert second.new_vertices == [4]


def test_expand_step_colors_spliced_ear_evenly(kite):
    core, result, report = coloring.ears.expand_step(kite, {0}, 2, Coloring(), 1)

    assert core == set(range(5))
    assert report.warnings == []
    assert [ear.orientation for ear in report.ears] == [Orientation.ASCENDING] * 2
    assert result.assignment[(0, 4)] == 1
    assert result.assignment[(2, 4)] == 2
    assert result.assignment[(2, 3)] == 4


def test_expand_step_star():
    star4 = Graph.from_edges([(0, leaf) for leaf in range(1, 5)])
    core, result, report = coloring.ears.expand_step(star4, {0}, 1, Coloring(), 1)

    assert core == set(range(5))
    assert report.b_k == 4
    assert report.budget == 4
    assert report.colors_used == 4
    assert sorted(result.assignment.values()) == [1, 2, 3, 4]


def test_expand_step_cycle(c5):
    core, result, report = coloring.ears.expand_step(c5, {0}, 2, Coloring(), 1)

    assert core == set(range(5))
    assert len(report.ears) == 1
    assert [result.assignment[e] for e in [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]] == [
        1,
        2,
        3,
        4,
        5,
    ]
    assert report.colors_used == 5


def test_expand_step_path_uses_bridge_rule(p5):
    core, result, report = coloring.ears.expand_step(p5, {2}, 2, Coloring(), 1)

    assert core == {1, 2, 3}
    assert report.b_k == 2
    assert report.ears == []
    assert result.assignment == {(1, 2): 1, (2, 3): 2}
    assert report.colors_used == 2


def test_expand_step_offsets_palette(p5):
    inner = Coloring(assignment={(1, 2): 1, (2, 3): 2})
    _, result, report = coloring.ears.expand_step(p5, {1, 2, 3}, 1, inner, 6)

    assert report.palette_start == 6
    assert report.palette_size == 3
    assert result.assignment == {(0, 1): 6, (1, 2): 1, (2, 3): 2, (3, 4): 7}


def test_expand_step_rejects_non_dominating_core(c6):
    with pytest.raises(InvalidGraphError):
        coloring.ears.expand_step(c6, {0}, 2, Coloring(), 1)

    with pytest.raises(InvalidGraphError):
        coloring.ears.expand_step(c6, {0, 3}, 2, Coloring(), 1)


def test_advance_core_matches_expand_step(corpus):
    for spec, g in corpus[:80]:
        core = frozenset({0})
        k = max(1, max(decompose(g, core).distance))

        advanced, frontier, ears = coloring.ears.advance_core(g, core)
        expanded, _, report = coloring.ears.expand_step(g, core, k, Coloring(), 1)

        assert advanced == expanded, spec.name
        assert frontier.size == report.b_k, spec.name
        assert [ear.vertices for ear in ears] == [ear.vertices for ear in report.ears], spec.name
