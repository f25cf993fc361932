"""Closed-form values and witness layouts for every thinness variant of crown graphs.

In a layout of CR_n, a vertex is *little* when it comes before its mirror and
*big* otherwise. Consistency of a crown layout reduces to two conditions on
little vertices and mixed-side classes, checked here independently of the
generic triple sweep.
"""
import logging
from typing import Any, Callable

from ..core.errors import ConstructionError, ThinnessError
from ..graphs.graph import CrownLabeling, Graph, crown
from ..graphs.layout import Layout, VariantSpec, Verdict, variant
from .base import LayoutConstructor, ParameterField, variant_field

logger = logging.getLogger(__name__)


def crown_value(spec: VariantSpec, n: int) -> int:
    """Value of the variant ``spec`` on CR_n."""
    if n < 1:
        raise ThinnessError(f"Crown parameter must be at least 1, got {n}")
    name = spec.name
    if name in ('thin', 'fp'):
        return max(1, n - 1)
    if name == 'pthin':
        if n <= 3:
            return (1, 1, 2)[n - 1]
        return n - 1 if n % 2 == 0 else n
    if name in ('indthin', 'indpthin'):
        return n
    if name in ('compthin', 'comppthin'):
        return (2, 2, 3)[n - 1] if n <= 3 else 2 * n - 4
    if name == 'fpp':
        return (1, 1, 3)[n - 1] if n <= 3 else n + 1
    if name in ('indfp', 'indfpp'):
        return 1 if n == 1 else n + 1
    if name in ('compfp', 'compfpp'):
        return 2 if n == 1 else 2 * n - 2
    raise ThinnessError(f"No crown value for variant {name}")


def classify_little_big(labeling: CrownLabeling, order: list[int]) -> dict[int, str]:
    """Tag each vertex ``little`` or ``big`` relative to its mirror in ``order``."""
    pos = {v: p for p, v in enumerate(order)}
    return {
        v: 'little' if pos[v] < pos[labeling.mirror(v)] else 'big'
        for v in order
    }


def check_condition1(graph: Graph, labeling: CrownLabeling, layout: Layout) -> Verdict:
    """Every little vertex is the first member of its class on its side."""
    labeling.check(graph)
    layout.check_for(graph)
    tags = classify_little_big(labeling, list(layout.order))
    for index, members in enumerate(layout.classes):
        for side in ('A', 'B'):
            same_side = [v for v in members if labeling.side(v) == side]
            for v in same_side[1:]:
                if tags[v] == 'little':
                    return Verdict(
                        False, 'condition1',
                        detail=f"little vertex {labeling.name(v)} is not first on its side in class {index}",
                        extra={'vertex': v, 'class': index},
                    )
    return Verdict(True)


def check_condition2(graph: Graph, labeling: CrownLabeling, layout: Layout) -> Verdict:
    """No class holds v_i < v'_j followed by a v'_z (z != i), or the mirrored pattern."""
    labeling.check(graph)
    layout.check_for(graph)
    pos = layout.position
    order = layout.order
    for index, members in enumerate(layout.classes):
        for x in members:
            for y in members:
                if labeling.side(x) == labeling.side(y) or pos(x) > pos(y):
                    continue
                # x < y on opposite sides; any later z on y's side other than mirror(x) breaks it
                for z in order[pos(y) + 1:]:
                    if labeling.side(z) == labeling.side(y) and z != labeling.mirror(x):
                        return Verdict(
                            False, 'condition2',
                            detail=(f"class {index} has {labeling.name(x)} < {labeling.name(y)} "
                                    f"< {labeling.name(z)}"),
                            extra={'class': index, 'vertices': [x, y, z]},
                        )
    return Verdict(True)


# Layout builders. ``v(i)`` and ``w(i)`` stand for v_i and v'_i.

def _thin_small(n: int, v, w) -> Layout:
    if n == 1:
        return Layout([v(1), w(1)], [[v(1), w(1)]])
    if n == 2:
        order = [v(1), w(2), v(2), w(1)]
        return Layout(order, [order])
    if n == 3:
        order = [v(1), w(2), w(3), v(3), v(2), w(1)]
        return Layout(order, [[v(1), w(3), v(2)], [w(2), v(3), w(1)]])
    order = [v(1), w(3), v(4), w(4), w(2), v(2), v(3), w(1)]
    return Layout(order, [[v(1), w(2), w(1)], [w(3), w(4), v(3)], [v(4), v(2)]])


def _strong_even(n: int, v, w) -> Layout:
    """Strongly consistent layout with n - 1 classes for even n >= 6."""
    classes = [
        [v(1), w(2), w(1)],
        [w(3), w(4), v(3)],
        [v(4), v(2)],
        [v(5), v(n)],
        [w(6), w(5)],
    ]
    middle = [w(6), w(5)]
    for i in range(7, n, 2):
        middle += [v(i), v(i - 1), w(i + 1), w(i)]
        classes.append([v(i), v(i - 1)])
        classes.append([w(i + 1), w(i)])
    order = [v(1), w(3), v(4), w(4), v(5)] + middle + [v(n), w(2), v(2), v(3), w(1)]
    return Layout(order, classes)


def _consistent_odd(n: int, v, w) -> Layout:
    """Consistent (not strongly) layout with n - 1 classes for odd n >= 5."""
    order = [v(n)]
    classes = []
    for i in range(1, n - 3, 2):
        order += [v(i), w(i + 1), v(i + 1), w(i)]
        classes.append([v(i), v(i + 1)])
        classes.append([w(i + 1), w(i)])
    order += [w(n - 1), w(n - 2), v(n - 2), v(n - 1), w(n)]
    classes.append([w(n - 1), v(n - 2), w(n)])
    classes.append([v(n), w(n - 2), v(n - 1)])
    return Layout(order, classes)


def _strong_odd(n: int, v, w) -> Layout:
    """Strongly consistent layout with n classes for odd n >= 5."""
    order = [v(1)]
    classes = [[v(1), w(n)]]
    for i in range(2, n, 2):
        order += [w(i), w(i - 1), v(i + 1), v(i)]
        classes.append([w(i), w(i - 1)])
        classes.append([v(i + 1), v(i)])
    order.append(w(n))
    return Layout(order, classes)


def _thin(n, v, w):
    if n <= 4:
        return _thin_small(n, v, w)
    return _strong_even(n, v, w) if n % 2 == 0 else _consistent_odd(n, v, w)


def _pthin(n, v, w):
    if n <= 4:
        return _thin_small(n, v, w)
    return _strong_even(n, v, w) if n % 2 == 0 else _strong_odd(n, v, w)


def _independent(n, v, w):
    if n == 1:
        return Layout([v(1), w(1)], [[v(1), w(1)]])
    order, classes = [], []
    start = 1 if n % 2 == 0 else 2
    if n % 2:
        order.append(v(1))
        classes.append([v(1), w(1)])
    for k in range(start, n, 2):
        order += [v(k), w(k + 1), v(k + 1), w(k)]
        classes += [[v(k), v(k + 1)], [w(k), w(k + 1)]]
    if n % 2:
        order.append(w(1))
    return Layout(order, classes)


def _complete(n, v, w):
    if n == 1:
        return Layout([v(1), w(1)], [[v(1)], [w(1)]])
    if n == 2:
        return Layout([v(1), w(2), v(2), w(1)], [[v(1), w(2)], [v(2), w(1)]])
    if n == 3:
        order = [v(1), w(2), v(3), w(1), v(2), w(3)]
        return Layout(order, [[v(1), w(3)], [w(2), v(3)], [w(1), v(2)]])
    order = (
        [w(1), w(2)] + [w(i) for i in range(5, n + 1)]
        + [v(4), v(3)] + [v(i) for i in range(5, n + 1)]
        + [v(2), v(1), w(3), w(4)]
    )
    pairs = [[w(1), v(2)], [w(2), v(1)], [v(4), w(3)], [v(3), w(4)]]
    paired = {x for pair in pairs for x in pair}
    classes = pairs + [[x] for x in order if x not in paired]
    classes.sort(key=lambda members: min(order.index(x) for x in members))
    return Layout(order, classes)


def _fp(n, v, w):
    if n <= 2:
        return _thin_small(n, v, w)
    if n == 3:
        return Layout.from_sequence([[w(1)], [v(2), w(3), v(1), w(2), v(3)]])
    if n == 4:
        return Layout.from_sequence([[w(1)], [v(2), v(1)], [w(3), v(4), w(2), v(3), w(4)]])
    classes = [[w(1)], [v(2), v(1)], [w(3), w(2)]]
    for i in range(4, n - 1):
        classes.append([v(i), v(i - 1)] if i % 2 == 0 else [w(i), w(i - 1)])
    if n % 2 == 0:
        classes.append([w(n - 1), v(n), w(n - 2), v(n - 1), w(n)])
    else:
        classes.append([v(n - 1), w(n), v(n - 2), w(n - 1), v(n)])
    return Layout.from_sequence(classes)


def _fpp(n, v, w):
    if n <= 2:
        return _thin_small(n, v, w)
    if n == 3:
        return Layout.from_sequence([[v(1)], [w(2), v(3), w(1), v(2)], [w(3)]])
    classes = [[v(1)]]
    for i in range(2, n + 1):
        classes.append([w(i), w(i - 1)] if i % 2 == 0 else [v(i), v(i - 1)])
    classes.append([v(n)] if n % 2 == 0 else [w(n)])
    return Layout.from_sequence(classes)


def _independent_precedence(n, v, w):
    if n == 1:
        return Layout([v(1), w(1)], [[v(1), w(1)]])
    if n == 2:
        return Layout.from_sequence([[v(1)], [w(2), w(1)], [v(2)]])
    classes = [[v(1)]]
    last = n - 2 if n % 2 else n - 3
    for i in range(1, last + 1, 2):
        classes += [[w(i + 1), w(i)], [v(i + 2), v(i + 1)]]
    if n % 2:
        classes.append([w(n)])
    else:
        classes += [[w(n), w(n - 1)], [v(n)]]
    return Layout.from_sequence(classes)


def _complete_precedence(n, v, w):
    if n == 1:
        return Layout.from_sequence([[v(1)], [w(1)]])
    classes = [[w(i)] for i in range(3, n + 1)]
    classes += [[v(1), w(2)], [v(2), w(1)]]
    classes += [[v(i)] for i in range(3, n + 1)]
    return Layout.from_sequence(classes)


_BUILDERS: dict[str, Callable[[int, Any, Any], Layout]] = {
    'thin': _thin,
    'pthin': _pthin,
    'indthin': _independent,
    'indpthin': _independent,
    'compthin': _complete,
    'comppthin': _complete,
    'fp': _fp,
    'fpp': _fpp,
    'indfp': _independent_precedence,
    'indfpp': _independent_precedence,
    'compfp': _complete_precedence,
    'compfpp': _complete_precedence,
}


def construct(spec: VariantSpec, n: int) -> Layout:
    """Witness layout for ``spec`` on CR_n with ``crown_value(spec, n)`` classes."""
    if n < 1:
        raise ThinnessError(f"Crown parameter must be at least 1, got {n}")
    labels = CrownLabeling(n)
    layout = _BUILDERS[spec.name](n, labels.v, labels.vp)
    if layout.n != 2 * n:
        raise ConstructionError(f"{spec.name} layout of CR_{n} covers {layout.n} of {2 * n} vertices")
    logger.debug(f"Built {spec.name} layout of CR_{n} with {layout.width} classes")
    return layout


class CrownConstructor(LayoutConstructor):
    """Crown graphs CR_n for all twelve variants."""

    constructor_id = "crown"
    constructor_name = "Crown"
    constructor_description = "K_{n,n} minus a perfect matching"

    @classmethod
    def get_parameter_fields(cls) -> list[ParameterField]:
        return [
            variant_field(),
            ParameterField(name='n', label='n', minimum=1, help_text='Vertices per side'),
        ]

    @classmethod
    def variant(cls, params: dict[str, Any]) -> VariantSpec:
        return variant(params['variant'])

    @classmethod
    def build_graph(cls, params: dict[str, Any]) -> Graph:
        return crown(params['n'])[0]

    @classmethod
    def build_layout(cls, params: dict[str, Any]) -> Layout:
        return construct(cls.variant(params), params['n'])

    @classmethod
    def expected_width(cls, params: dict[str, Any]) -> int:
        return crown_value(cls.variant(params), params['n'])

