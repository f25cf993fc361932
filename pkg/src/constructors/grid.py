"""Bounds and witness layouts for grid graphs.

Three constructions live here:

* a consistent layout of GR_{n,m} with ceil((n+1)/2) classes, each class a
  caterpillar built around one odd row;
* a precedence layout of GR_{2,n} with ceil((n+1)/2) classes: singletons on
  alternating rows at even columns, then the induced path that remains;
* a precedence layout of GR_n with ceil((n-1)/2)^2 + 1 classes: claw-shaped
  classes placed every two rows and columns, then the leftover caterpillar.
"""
import logging
from typing import Any, Optional

import networkx as nx

from ..core.errors import ConstructionError, GraphError, ThinnessError
from ..graphs.graph import Graph, grid
from ..graphs.layout import Layout, VariantSpec, variant
from .base import LayoutConstructor, ParameterField

logger = logging.getLogger(__name__)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check_dims(*dims: int) -> None:
    for d in dims:
        if d < 1:
            raise GraphError(f"Grid dimensions must be at least 1, got {d}")


def caterpillar_order(graph: Graph, members: list[int]) -> list[int]:
    """Consistent single-class order of an induced forest of caterpillars.

    Components are emitted one after another. Inside a component the spine is
    walked from one end and each spine vertex is preceded by its leaves.
    """
    sub = graph.to_networkx().subgraph(members)
    order: list[int] = []
    for component in sorted(nx.connected_components(sub), key=min):
        tree = sub.subgraph(component)
        if tree.number_of_edges() != len(component) - 1:
            raise ConstructionError(f"Vertices {sorted(component)} do not induce a tree")
        spine = [v for v in tree if tree.degree(v) >= 2]
        if not spine:
            order.extend(sorted(component))
            continue
        path = tree.subgraph(spine)
        ends = sorted(v for v in spine if path.degree(v) <= 1)
        if max(d for _, d in path.degree()) > 2 or not ends:
            raise ConstructionError(f"Vertices {sorted(component)} do not induce a caterpillar")
        previous, current = None, ends[0]
        while current is not None:
            order.extend(sorted(u for u in tree[current] if tree.degree(u) == 1))
            order.append(current)
            following = [u for u in path[current] if u != previous]
            previous, current = current, (following[0] if following else None)
    return order


# ---------------------------------------------------------------- thinness

def thin_bounds(n: int, m: int) -> tuple[int, int]:
    """Lower and upper bounds on the thinness of GR_{n,m}."""
    _check_dims(n, m)
    n, m = min(n, m), max(n, m)
    return max(1, _ceil_div(n - 1, 3)), _ceil_div(n + 1, 2)


def _class_chain(i: int, n: int, m: int) -> list[tuple[int, int]]:
    """Cells of class ``i`` in their internal order."""
    chain = []
    for j in range(1, m + 1):
        rows = (2 * i, 2 * i - 2, 2 * i - 1) if (j - i) % 2 == 0 else (2 * i - 1,)
        chain.extend((r, j) for r in rows if 1 <= r <= n)
    return chain


def _fits(graph: Graph, t: int, placed: list[int]) -> bool:
    """True when the neighbors of ``t`` among ``placed`` form a suffix."""
    seen = False
    for u in placed:
        if graph.has_edge(u, t):
            seen = True
        elif seen:
            return False
    return True


def _merge_chains(graph: Graph, first: list[int], second: list[int]) -> list[int]:
    """Interleave two class chains so that neither class is broken by the other."""
    a, b = len(first), len(second)
    done = [[False] * (b + 1) for _ in range(a + 1)]
    done[a][b] = True
    for x in range(a, -1, -1):
        for y in range(b, -1, -1):
            if (x, y) == (a, b):
                continue
            done[x][y] = (
                (x < a and done[x + 1][y] and _fits(graph, first[x], second[:y]))
                or (y < b and done[x][y + 1] and _fits(graph, second[y], first[:x]))
            )
    if not done[0][0]:
        raise ConstructionError("No consistent interleaving of adjacent grid classes")
    merged, x, y = [], 0, 0
    while (x, y) != (a, b):
        if x < a and done[x + 1][y] and _fits(graph, first[x], second[:y]):
            merged.append(first[x])
            x += 1
        else:
            merged.append(second[y])
            y += 1
    return merged


def _insert_after(order: list[int], merged: list[int], previous: set[int]) -> list[int]:
    """Insert the new class from ``merged`` into ``order`` next to the previous class."""
    head: list[int] = []
    after: dict[int, list[int]] = {}
    anchor = None
    for v in merged:
        if v in previous:
            anchor = v
        elif anchor is None:
            head.append(v)
        else:
            after.setdefault(anchor, []).append(v)
    result: list[int] = []
    for v in order:
        if v in previous and head:
            result.extend(head)
            head = []
        result.append(v)
        result.extend(after.get(v, []))
    return result


def thin_layout(n: int, m: int) -> Layout:
    """Consistent layout of GR_{n,m} with ceil((n+1)/2) classes (dimensions swapped if n > m)."""
    _check_dims(n, m)
    if n > m:
        inner = thin_layout(m, n)
        # cell (a, b) of GR_{m,n} is cell (b, a) of GR_{n,m}
        def swap(v: int) -> int:
            a, b = divmod(v, n)
            return b * m + a
        return Layout([swap(v) for v in inner.order], [[swap(v) for v in c] for c in inner.classes])

    graph, labels = grid(n, m)
    k = _ceil_div(n + 1, 2)
    chains = [[labels.vertex(r, j) for r, j in _class_chain(i, n, m)] for i in range(1, k + 1)]
    order = list(chains[0])
    for previous, current in zip(chains, chains[1:]):
        merged = _merge_chains(graph, previous, current)
        order = _insert_after(order, merged, set(previous))
    logger.debug(f"Built thin layout of GR_{n},{m} with {k} classes")
    return Layout(order, chains)


# ---------------------------------------------------------------- precedence thinness

def fp_gr2_value(n: int) -> int:
    _check_dims(n)
    return _ceil_div(n + 1, 2)


def fp_gr2_layout(n: int) -> Layout:
    """Precedence layout of GR_{2,n}: boxed singletons first, then the remaining path."""
    _check_dims(n)
    graph, labels = grid(2, n)
    singletons = [
        labels.vertex(1 if (j // 2) % 2 else 2, j)
        for j in range(2, n + 1, 2)
    ]
    taken = set(singletons)
    rest = [v for v in graph.vertices if v not in taken]
    return Layout.from_sequence([[v] for v in singletons] + [caterpillar_order(graph, rest)])


def fp_grn_bounds(n: int) -> tuple[int, int]:
    """Lower and upper bounds on the precedence thinness of GR_n."""
    _check_dims(n)
    half = _ceil_div(n - 1, 2)
    return max(1, _ceil_div(n - 1, 3) * half + 1), half * half + 1


def fp_bounds(n: int, m: int) -> tuple[int, int]:
    """Known bounds on fp(GR_{n,m}): paths, two-row grids and square grids."""
    _check_dims(n, m)
    n, m = min(n, m), max(n, m)
    if n == 1:
        return 1, 1
    if n == 2:
        value = fp_gr2_value(m)
        return value, value
    if n == m:
        return fp_grn_bounds(n)
    raise ThinnessError(f"No precedence thinness bounds known for GR_{n},{m}")


def fp_grn_layout(n: int) -> Layout:
    """Precedence layout of GR_n with claw classes and a final caterpillar class.

    Cells are addressed as (x, y) with x the column and y the row counted from
    the bottom, both from 0. A claw centered at even (x, y) holds the cell
    below, the cell to the left, the center and the cell diagonally up-right,
    in that order, minus the cells that fall off the grid.
    """
    _check_dims(n)
    graph, labels = grid(n, n)

    def cell(x: int, y: int) -> int:
        return labels.vertex(y + 1, x + 1)

    claws = []
    for y in range(0, n - 1, 2):
        for x in range(0, n - 1, 2):
            claw = []
            if y > 0:
                claw.append(cell(x, y - 1))
            if x > 0:
                claw.append(cell(x - 1, y))
            claw += [cell(x, y), cell(x + 1, y + 1)]
            claws.append(claw)
    taken = {v for claw in claws for v in claw}
    rest = [v for v in graph.vertices if v not in taken]
    return Layout.from_sequence(claws + [caterpillar_order(graph, rest)])


class GridThinConstructor(LayoutConstructor):
    """Thin layout of GR_{n,m}."""

    constructor_id = "grid-thin"
    constructor_name = "Grid (thin)"
    constructor_description = "Consistent layout of the n x m grid"

    @classmethod
    def get_parameter_fields(cls) -> list[ParameterField]:
        return [
            ParameterField(name='n', label='Rows', minimum=1),
            ParameterField(name='m', label='Columns', minimum=1),
        ]

    @classmethod
    def variant(cls, params: dict[str, Any]) -> VariantSpec:
        return variant('thin')

    @classmethod
    def build_graph(cls, params: dict[str, Any]) -> Graph:
        return grid(params['n'], params['m'])[0]

    @classmethod
    def build_layout(cls, params: dict[str, Any]) -> Layout:
        return thin_layout(params['n'], params['m'])

    @classmethod
    def expected_width(cls, params: dict[str, Any]) -> int:
        return thin_bounds(params['n'], params['m'])[1]


class GridFp2Constructor(LayoutConstructor):
    """Precedence layout of GR_{2,n}."""

    constructor_id = "grid-fp2"
    constructor_name = "Grid 2 x n (fp)"
    constructor_description = "Precedence layout of the 2 x n grid"

    @classmethod
    def get_parameter_fields(cls) -> list[ParameterField]:
        return [ParameterField(name='n', label='Columns', minimum=1)]

    @classmethod
    def variant(cls, params: dict[str, Any]) -> VariantSpec:
        return variant('fp')

    @classmethod
    def build_graph(cls, params: dict[str, Any]) -> Graph:
        return grid(2, params['n'])[0]

    @classmethod
    def build_layout(cls, params: dict[str, Any]) -> Layout:
        return fp_gr2_layout(params['n'])

    @classmethod
    def expected_width(cls, params: dict[str, Any]) -> int:
        return fp_gr2_value(params['n'])


class GridFpnConstructor(LayoutConstructor):
    """Precedence layout of GR_n."""

    constructor_id = "grid-fpn"
    constructor_name = "Grid n x n (fp)"
    constructor_description = "Claw-based precedence layout of the n x n grid"

    @classmethod
    def get_parameter_fields(cls) -> list[ParameterField]:
        return [ParameterField(name='n', label='Side', minimum=1)]

    @classmethod
    def variant(cls, params: dict[str, Any]) -> VariantSpec:
        return variant('fp')

    @classmethod
    def build_graph(cls, params: dict[str, Any]) -> Graph:
        return grid(params['n'], params['n'])[0]

    @classmethod
    def build_layout(cls, params: dict[str, Any]) -> Layout:
        return fp_grn_layout(params['n'])

    @classmethod
    def expected_width(cls, params: dict[str, Any]) -> Optional[int]:
        return fp_grn_bounds(params['n'])[1]
