import networkx as nx
import pytest

from src.constructors.crown import crown_value
from src.core.errors import GraphError, InstanceError, ThinnessError
from src.graphs.exact import (
    chromatic_number,
    conflict_graph,
    exact_value,
    find_k_coloring,
    find_mu_coloring,
    is_mu_colorable,
    min_classes_for_order,
)
from src.graphs.graph import Graph, complement, complete, crown, grid, induced_subgraph, matching_nk2, path, random_graph
from src.graphs.layout import VARIANTS, Layout, variant, verify
from tests.helpers import brute_force_value, graphs_up_to


def _c5() -> Graph:
    return Graph.from_networkx(nx.cycle_graph(5))


def test_chromatic_number():
    assert chromatic_number(_c5()) == 3
    assert chromatic_number(complete(4)) == 4
    assert chromatic_number(crown(4)[0]) == 2
    assert chromatic_number(Graph(3)) == 1
    assert chromatic_number(Graph(0)) == 0


def test_find_k_coloring():
    colors = find_k_coloring(_c5(), 3)
    assert colors is not None
    assert all(colors[u] != colors[v] for u, v in _c5().edges())
    assert set(colors) <= {0, 1, 2}
    assert find_k_coloring(_c5(), 2) is None
    with pytest.raises(ThinnessError):
        find_k_coloring(_c5(), 0)


def test_mu_coloring(p3):
    assert is_mu_colorable(p3, [1, 2, 1])
    colors = find_mu_coloring(p3, [1, 2, 1])
    assert colors == [1, 2, 1]
    assert not is_mu_colorable(complete(2), [1, 1])
    with pytest.raises(InstanceError):
        find_mu_coloring(p3, [1, 2])
    with pytest.raises(InstanceError):
        find_mu_coloring(p3, [0, 2, 1])


def test_conflict_graph(c4):
    conflicts = conflict_graph(c4, [0, 1, 2, 3], variant('thin'))
    # 0 and 1 cannot share a class: 0 ~ 3 but 1 !~ 3
    assert conflicts.has_edge(0, 1)
    assert not conflicts.has_edge(2, 3)
    with pytest.raises(ThinnessError):
        conflict_graph(c4, [0, 1, 2, 3], variant('fp'))
    with pytest.raises(GraphError):
        conflict_graph(c4, [0, 1, 2], variant('thin'))


def test_min_classes_for_order(c4):
    k, layout = min_classes_for_order(c4, [0, 1, 2, 3], variant('thin'))
    assert k == layout.width == 2
    assert verify(c4, layout, variant('thin'))
    k, layout = min_classes_for_order(path(4), [0, 1, 2, 3], variant('fpp'))
    assert k == 1


@pytest.mark.parametrize("name", list(VARIANTS))
def test_agrees_with_brute_force_on_all_small_graphs(name):
    spec = variant(name)
    for g in graphs_up_to(4):
        result = exact_value(g, spec)
        assert result.value == brute_force_value(g, spec), g.edges()
        assert verify(g, result.layout, spec)
        assert result.layout.width == result.value


@pytest.mark.slow
@pytest.mark.parametrize("name", list(VARIANTS))
def test_agrees_with_brute_force_on_five_vertices(name):
    spec = variant(name)
    for seed in range(60):
        g = random_graph(5, 0.2 + 0.6 * (seed % 4) / 3, seed=seed)
        assert exact_value(g, spec).value == brute_force_value(g, spec), g.edges()


def _values(g: Graph) -> dict[str, int]:
    return {name: exact_value(g, spec).value for name, spec in VARIANTS.items()}


def test_weaker_variants_never_need_more_classes():
    pairs = [(a, b) for a in VARIANTS.values() for b in VARIANTS.values() if a.relaxes(b)]
    graphs = list(graphs_up_to(4)) + [path(5), _c5(), complement(_c5())]
    for g in graphs:
        values = _values(g)
        for weaker, stronger in pairs:
            assert values[weaker.name] <= values[stronger.name], (weaker.name, stronger.name, g.edges())


def test_values_are_monotone_on_induced_subgraphs():
    for seed in range(30):
        g = random_graph(5, 0.5, seed=seed)
        values = _values(g)
        for v in range(g.n):
            sub, _ = induced_subgraph(g, [u for u in range(g.n) if u != v])
            for name, value in _values(sub).items():
                assert value <= values[name], (name, seed, v)


def test_small_values(c4, claw):
    assert exact_value(c4, variant('thin')).value == 2
    assert exact_value(claw, variant('thin')).value == 1
    assert exact_value(claw, variant('pthin')).value == 2
    assert exact_value(path(5), variant('fpp')).value == 1


def test_empty_graph():
    result = exact_value(Graph(0), variant('thin'))
    assert result.value == 0
    assert result.layout == Layout([], [])


def test_witness_is_lexicographically_first():
    result = exact_value(Graph(3), variant('thin'))
    assert result.layout == Layout([0, 1, 2], [[0, 1, 2]])


@pytest.mark.slow
def test_jobs_do_not_change_the_result():
    g = crown(4)[0]
    for name in ('thin', 'fp', 'indthin'):
        single = exact_value(g, variant(name), jobs=1)
        parallel = exact_value(g, variant(name), jobs=3)
        assert single.value == parallel.value == crown_value(variant(name), 4)
        assert single.layout == parallel.layout


def test_budget_runs_out():
    g = grid(4, 4)[0]
    result = exact_value(g, variant('thin'), budget_ms=1)
    assert result.inconclusive
    data = result.to_dict()
    assert data['inconclusive'] is True
    assert data['variant'] == 'thin'
    if result.layout is not None:
        assert verify(g, result.layout, variant('thin'))
        assert result.upper == result.layout.width


def test_result_to_dict(p3):
    data = exact_value(p3, variant('fpp')).to_dict()
    assert data['value'] == 1
    assert data['variant'] == 'fpp'
    assert data['layout']['classes'] == [[0, 1, 2]]


@pytest.mark.parametrize("n", [2, 3])
def test_independent_and_complete_duality(n):
    g = crown(n)[0]
    for strength in ('fp', 'fpp'):
        ind = exact_value(g, variant('ind' + strength)).value
        comp = exact_value(complement(g), variant('comp' + strength)).value
        assert ind == comp


@pytest.mark.parametrize("n", [2, 3, 4])
def test_matchings_and_their_complements(n):
    m = matching_nk2(n)
    assert exact_value(m, variant('indpthin')).value == 2
    assert exact_value(complement(m), variant('comppthin')).value == n


@pytest.mark.slow
def test_duality_on_random_graphs():
    for seed in range(500):
        g = random_graph(6, 0.5, seed=seed)
        co = complement(g)
        assert exact_value(g, variant('indfp')).value == exact_value(co, variant('compfp')).value
        assert exact_value(g, variant('indfpp')).value == exact_value(co, variant('compfpp')).value
