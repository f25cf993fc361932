import pytest

from src.constructors.cograph import CographConstructor, fp_cograph, thin_cograph, witness_fp, witness_thin
from src.core.errors import CotreeSyntaxError, ThinnessError
from src.graphs.cotree import CotreeExpr, CotreeOp, evaluate, is_complete_expr, parse_cotree, random_cotree
from src.graphs.exact import exact_value
from src.graphs.graph import Graph, complete, complete_bipartite
from src.graphs.layout import is_precedence, variant, verify


def test_parse_and_print():
    expr = parse_cotree(" ( (1 + 1) * (1+1) ) ")
    assert expr.op is CotreeOp.JOIN
    assert expr.leaves == 4
    assert str(expr) == "((1+1)*(1+1))"
    assert parse_cotree("1").is_leaf


@pytest.mark.parametrize("text, position", [
    ("", 0),
    ("(1", 2),
    ("(1)", 2),
    ("(1+1*1)", 4),
    ("(1+1))", 5),
    ("2", 0),
    ("(1+x)", 3),
])
def test_syntax_errors(text, position):
    with pytest.raises(CotreeSyntaxError) as info:
        parse_cotree(text)
    assert info.value.position == position
    assert f"position {position}" in str(info.value)


def test_nodes_need_two_children():
    with pytest.raises(ThinnessError):
        CotreeExpr(CotreeOp.JOIN, (CotreeExpr(CotreeOp.LEAF),))


def test_evaluate():
    assert evaluate(parse_cotree("((1+1)*(1+1))")) == complete_bipartite(2, 2)
    assert evaluate(parse_cotree("(1*1*1)")) == complete(3)
    assert evaluate(parse_cotree("(1+1+1)")) == Graph(3)


def test_leaves_are_numbered_left_to_right():
    g = evaluate(parse_cotree("((1*1)+1)"))
    assert g.edges() == [(0, 1)]


def test_is_complete_matches_edge_count():
    for seed in range(200):
        expr = random_cotree(1 + seed % 9, seed=seed)
        g = evaluate(expr)
        assert expr.leaves == g.n
        assert is_complete_expr(expr) == (g.num_edges == g.n * (g.n - 1) // 2)


def test_random_cotree_is_seeded():
    assert str(random_cotree(8, seed=5)) == str(random_cotree(8, seed=5))
    with pytest.raises(ThinnessError):
        random_cotree(0)


@pytest.mark.parametrize("text, thin, fp", [
    ("1", 1, 1),
    ("((1+1)*(1+1))", 2, 2),
    ("(1*1*1)", 1, 1),
    ("((1+1)*(1*1))", 1, 1),
    ("(1+1)", 1, 1),
    ("((1+1+1)*(1+1))", 2, 2),
    ("(((1+1)*(1+1))+((1+1)*(1+1)))", 2, 3),
])
def test_values(text, thin, fp):
    expr = parse_cotree(text)
    assert thin_cograph(expr) == thin
    assert fp_cograph(expr) == fp


def test_witnesses_on_random_cotrees():
    for seed in range(300):
        expr = random_cotree(1 + seed % 12, seed=seed)
        g = evaluate(expr)
        thin_layout = witness_thin(expr)
        assert verify(g, thin_layout, variant('thin'))
        assert thin_layout.width == thin_cograph(expr)
        fp_layout = witness_fp(expr)
        assert is_precedence(fp_layout)
        assert verify(g, fp_layout, variant('fp'))
        assert fp_layout.width == fp_cograph(expr)


@pytest.mark.parametrize("text", ["((1+1)*(1+1))", "((1+1)*(1*1))", "((1+1+1)*(1+1))", "((1*1)+(1*1))"])
def test_values_match_search(text):
    expr = parse_cotree(text)
    g = evaluate(expr)
    assert exact_value(g, variant('thin')).value == thin_cograph(expr)
    assert exact_value(g, variant('fp')).value == fp_cograph(expr)


@pytest.mark.slow
def test_random_values_match_search():
    for seed in range(200):
        expr = random_cotree(1 + seed % 8, seed=seed)
        g = evaluate(expr)
        assert exact_value(g, variant('thin')).value == thin_cograph(expr)
        assert exact_value(g, variant('fp')).value == fp_cograph(expr)


def test_constructor_defaults_to_thin():
    params = CographConstructor.resolve({'expr': "((1+1)*(1+1))"})
    assert params['variant'] == 'thin'
    assert CographConstructor.expected_width(params) == 2
    assert not CographConstructor.validate_parameters({'expr': 5})[0]
    assert not CographConstructor.validate_parameters({'expr': "1", 'variant': 'pthin'})[0]
