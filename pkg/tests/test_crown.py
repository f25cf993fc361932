import random

import pytest

from src.constructors.crown import (
    CrownConstructor,
    check_condition1,
    check_condition2,
    classify_little_big,
    construct,
    crown_value,
)
from src.core.errors import GraphError, ThinnessError
from src.graphs.exact import exact_value
from src.graphs.graph import CrownLabeling, crown, grid
from src.graphs.layout import VARIANTS, Layout, is_consistent, is_strongly_consistent, variant, verify


@pytest.mark.parametrize("name, n, expected", [
    ('thin', 5, 4),
    ('pthin', 3, 2),
    ('indfp', 2, 3),
    ('compfp', 3, 4),
    ('fpp', 4, 5),
    ('thin', 1, 1),
    ('pthin', 5, 5),
    ('pthin', 6, 5),
    ('indthin', 3, 3),
    ('compthin', 2, 2),
    ('compthin', 6, 8),
    ('fpp', 3, 3),
    ('indfpp', 1, 1),
    ('compfpp', 1, 2),
])
def test_crown_values(name, n, expected):
    assert crown_value(variant(name), n) == expected


def test_crown_value_needs_positive_n():
    with pytest.raises(ThinnessError):
        crown_value(variant('thin'), 0)


@pytest.mark.parametrize("name", list(VARIANTS))
def test_construct_matches_value(name):
    spec = variant(name)
    for n in range(1, 13):
        g = crown(n)[0]
        layout = construct(spec, n)
        verdict = verify(g, layout, spec)
        assert verdict, f"{name} on CR_{n}: {verdict.detail}"
        assert layout.width == crown_value(spec, n)


def test_strong_even_layout_for_six():
    layout = construct(variant('thin'), 6)
    assert is_strongly_consistent(crown(6)[0], layout)
    assert layout.width == 5


def test_odd_consistent_layout_is_not_strong():
    g = crown(5)[0]
    layout = construct(variant('thin'), 5)
    assert is_consistent(g, layout)
    assert not is_strongly_consistent(g, layout)


def test_three_class_example():
    labels = CrownLabeling(3)
    v, w = labels.v, labels.vp
    order = [v(1), w(2), w(3), v(3), v(2), w(1)]
    layout = Layout(order, [[v(1), w(3), v(2)], [w(2), v(3), w(1)]])
    g = crown(3)[0]
    assert verify(g, layout, variant('thin'))
    assert check_condition1(g, labels, layout)
    assert check_condition2(g, labels, layout)


def test_little_and_big():
    labels = CrownLabeling(2)
    tags = classify_little_big(labels, [labels.v(1), labels.vp(2), labels.v(2), labels.vp(1)])
    assert tags[labels.v(1)] == 'little'
    assert tags[labels.vp(2)] == 'little'
    assert tags[labels.v(2)] == 'big'
    assert tags[labels.vp(1)] == 'big'


def test_condition1_failure():
    labels = CrownLabeling(2)
    v, w = labels.v, labels.vp
    layout = Layout([v(1), v(2), w(1), w(2)], [[v(1), v(2)], [w(1)], [w(2)]])
    verdict = check_condition1(crown(2)[0], labels, layout)
    assert verdict.check == 'condition1'
    assert verdict.extra['vertex'] == v(2)


def test_condition2_failure():
    labels = CrownLabeling(3)
    v, w = labels.v, labels.vp
    layout = Layout([v(1), w(2), w(3), v(2), v(3), w(1)], [[v(1), w(2)], [w(3)], [v(2)], [v(3)], [w(1)]])
    verdict = check_condition2(crown(3)[0], labels, layout)
    assert verdict.check == 'condition2'
    assert verdict.extra['vertices'] == [v(1), w(2), w(3)]


def test_conditions_reject_non_crowns():
    with pytest.raises(GraphError):
        check_condition1(grid(2, 2)[0], CrownLabeling(2), construct(variant('thin'), 2))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_conditions_agree_with_consistency(n):
    rng = random.Random(n)
    g, labels = crown(n)
    for _ in range(1000):
        order = list(g.vertices)
        rng.shuffle(order)
        k = rng.randint(1, 2 * n)
        tags = [rng.randrange(k) for _ in order]
        classes = [[v for v in order if tags[v] == c] for c in range(k)]
        layout = Layout(order, [c for c in classes if c])
        both = bool(check_condition1(g, labels, layout)) and bool(check_condition2(g, labels, layout))
        assert both == bool(is_consistent(g, layout))


def test_constructor_metadata():
    fields = {f.name: f for f in CrownConstructor.get_parameter_fields()}
    assert set(fields) == {'variant', 'n'}
    assert CrownConstructor.validate_parameters({'variant': 'thin', 'n': 4}) == (True, None)
    ok, message = CrownConstructor.validate_parameters({'variant': 'thin', 'n': 0})
    assert not ok and 'at least 1' in message
    ok, message = CrownConstructor.validate_parameters({'variant': 'nope', 'n': 3})
    assert not ok


@pytest.mark.slow
@pytest.mark.parametrize("name", list(VARIANTS))
@pytest.mark.parametrize("n", [1, 2, 3])
def test_values_match_exhaustive_search(name, n):
    spec = variant(name)
    result = exact_value(crown(n)[0], spec)
    assert result.value == crown_value(spec, n)


@pytest.mark.slow
@pytest.mark.parametrize("name", list(VARIANTS))
def test_values_match_exhaustive_search_for_four(name):
    spec = variant(name)
    assert exact_value(crown(4)[0], spec, jobs=2).value == crown_value(spec, 4)
