import random
from itertools import permutations

import pytest

from src.core.errors import InstanceError, LayoutError
from src.graphs.coloring import (
    MuInstance,
    MuPayload,
    build_perfect_order,
    greedy_color,
    random_precedence_proper_2thin,
    reduce_gdoubleprime,
    reduce_gprime,
    verify_interval_order,
    verify_perfect_order,
    verify_proper_interval_order,
)
from src.graphs.exact import chromatic_number, find_k_coloring, is_mu_colorable
from src.graphs.graph import Graph, complete, path, random_proper_interval_graph
from src.graphs.layout import BreakingTriple, Layout, is_consistent, is_strongly_consistent, variant, verify
from tests.helpers import graphs_up_to


def test_interval_orders(p3):
    assert verify_interval_order(p3, [0, 1, 2])
    assert verify_interval_order(p3, [0, 2, 1])
    verdict = verify_interval_order(p3, [1, 0, 2])
    assert verdict.check == 'interval'
    assert verdict.triple == BreakingTriple(1, 0, 2)


def test_proper_interval_orders(p3):
    assert verify_proper_interval_order(p3, [2, 1, 0])
    verdict = verify_proper_interval_order(p3, [0, 2, 1])
    assert verdict.check == 'proper-interval'
    assert verdict.triple == BreakingTriple(1, 2, 0, reversed=True)


def test_order_must_be_a_permutation(p3):
    with pytest.raises(LayoutError):
        verify_interval_order(p3, [0, 1])
    with pytest.raises(LayoutError):
        greedy_color(p3, [0, 1, 1])


def test_patterns_agree_with_single_class_layouts():
    for g in graphs_up_to(5):
        for order in permutations(range(g.n)):
            layout = Layout(order, [order])
            assert bool(verify_interval_order(g, order)) == bool(is_consistent(g, layout))
            assert bool(verify_proper_interval_order(g, order)) == bool(is_strongly_consistent(g, layout))


def test_perfect_order():
    p4 = path(4)
    assert verify_perfect_order(p4, [0, 1, 2, 3])
    verdict = verify_perfect_order(p4, [0, 1, 3, 2])
    assert verdict.check == 'perfect'
    assert verdict.extra['p4'] == [0, 1, 2, 3]


def test_greedy_color(p3):
    assert greedy_color(p3, [0, 1, 2]) == [1, 2, 1]
    assert greedy_color(complete(3), [2, 0, 1]) == [2, 3, 1]
    assert greedy_color(Graph(0), []) == []


def test_perfect_order_from_two_classes(p3):
    order = build_perfect_order(p3, Layout.from_sequence([[0, 1], [2]]))
    assert order == [1, 0, 2]
    assert verify_perfect_order(p3, order)


def test_perfect_order_needs_a_certificate(c4):
    with pytest.raises(InstanceError):
        build_perfect_order(c4, Layout.from_sequence([[0], [1], [2, 3]]))
    with pytest.raises(InstanceError):
        build_perfect_order(c4, Layout.from_sequence([[0, 1, 2, 3]]))
    with pytest.raises(InstanceError):
        build_perfect_order(c4, Layout.from_sequence([[0, 1]]))


@pytest.mark.parametrize("seed", range(200))
def test_greedy_on_perfect_order_is_optimal(seed):
    n = 3 + seed % 8
    g, layout = random_precedence_proper_2thin(n, seed=seed)
    assert verify(g, layout, variant('fpp'))
    assert layout.width <= 2
    order = build_perfect_order(g, layout)
    assert verify_perfect_order(g, order)
    assert max(greedy_color(g, order)) == chromatic_number(g)


def test_random_blocks_are_seeded():
    assert random_precedence_proper_2thin(9, seed=4) == random_precedence_proper_2thin(9, seed=4)
    g, layout = random_precedence_proper_2thin(1, seed=0)
    assert g.n == 1 and layout.width == 1
    with pytest.raises(InstanceError):
        random_precedence_proper_2thin(0)


def test_mu_instance_validation(p3):
    with pytest.raises(InstanceError):
        MuInstance(p3, [0, 1, 2], [1, 2])
    with pytest.raises(InstanceError):
        MuInstance(p3, [0, 1, 2], [0, 2, 1])
    with pytest.raises(InstanceError):
        MuInstance(p3, [0, 2, 1], [1, 2, 1])
    with pytest.raises(InstanceError):
        MuInstance(p3, [0, 1], [1, 2, 1])
    assert MuInstance(complete(2), [0, 1], [5, 5]).mu == [2, 2]


def test_mu_payload():
    assert MuPayload.model_validate({'mu': [1, 2]}).mu == [1, 2]


def test_gprime_small_instance():
    graph, layout = reduce_gprime(MuInstance(complete(2), [0, 1], [1, 2]))
    assert set(graph.edges()) == {(0, 1), (2, 3), (0, 3)}
    assert layout == Layout.from_sequence([[2, 3], [0, 1]])
    assert verify(graph, layout, variant('fp'))


def test_gprime_keeps_infeasibility():
    graph, _ = reduce_gprime(MuInstance(complete(2), [0, 1], [1, 1]))
    assert find_k_coloring(graph, 2) is None


def test_gdoubleprime_small_instance():
    graph, layout = reduce_gdoubleprime(MuInstance(complete(2), [0, 1], [1, 2]))
    # w1_1=2, w1_2=3, w2_1=4, w2_2=5; v_1 sees w1_2 only
    assert graph.n == 6
    assert graph.edges() == [(0, 1), (0, 3), (2, 3), (3, 4), (4, 5)]
    assert layout == Layout([2, 3, 0, 4, 5, 1], [[0, 1], [2, 3, 4, 5]])
    assert is_strongly_consistent(graph, layout)
    assert verify(graph, layout, variant('pthin'))
    assert chromatic_number(graph) == 2
    assert is_mu_colorable(complete(2), [1, 2])


def test_gdoubleprime_gadget_size():
    graph, layout = reduce_gdoubleprime(MuInstance(path(3), [0, 1, 2], [1, 2, 1]))
    assert graph.n == 3 + 9
    assert layout.width == 2
    assert layout.order[:4] == (3, 4, 5, 0)
    assert verify(graph, layout, variant('pthin'))


def _random_instances(count: int, seed: int):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, 5)
        g, order = random_proper_interval_graph(n, seed=rng.randrange(1 << 20))
        mu = [rng.randint(1, n) for _ in range(n)]
        yield MuInstance(g, order, mu)


def test_reductions_preserve_colorability():
    for inst in _random_instances(100, seed=3):
        expected = is_mu_colorable(inst.graph, inst.mu)
        gprime, gprime_layout = reduce_gprime(inst)
        assert verify(gprime, gprime_layout, variant('fp'))
        assert (find_k_coloring(gprime, inst.n) is not None) == expected
        gpp, gpp_layout = reduce_gdoubleprime(inst)
        assert verify(gpp, gpp_layout, variant('pthin'))
        assert (find_k_coloring(gpp, inst.n) is not None) == expected
