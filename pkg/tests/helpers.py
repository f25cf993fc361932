"""Brute-force reference checks, written without the library's verifier or search."""
from itertools import permutations, product
from typing import Iterator, Sequence

from src.graphs.graph import Graph
from src.graphs.layout import ClassConstraint, VariantSpec


def set_partitions(items: Sequence[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in set_partitions(rest):
        yield [[first]] + partition
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1:]


def segmentations(order: Sequence[int]) -> Iterator[list[list[int]]]:
    n = len(order)
    for cuts in product((False, True), repeat=max(0, n - 1)):
        classes = [[order[0]]]
        for v, cut in zip(order[1:], cuts):
            if cut:
                classes.append([])
            classes[-1].append(v)
        yield classes


def consistent(graph: Graph, order: Sequence[int], class_of: dict[int, int]) -> bool:
    for i, r in enumerate(order):
        for j in range(i + 1, len(order)):
            s = order[j]
            if class_of[r] != class_of[s]:
                continue
            for t in order[j + 1:]:
                if graph.has_edge(r, t) and not graph.has_edge(s, t):
                    return False
    return True


def satisfies(graph: Graph, order: Sequence[int], classes: list[list[int]], spec: VariantSpec) -> bool:
    class_of = {v: c for c, members in enumerate(classes) for v in members}
    for members in classes:
        pairs = [(u, v) for u in members for v in members if u < v]
        if spec.class_constraint is ClassConstraint.INDEPENDENT and any(graph.has_edge(u, v) for u, v in pairs):
            return False
        if spec.class_constraint is ClassConstraint.COMPLETE and not all(graph.has_edge(u, v) for u, v in pairs):
            return False
    if not consistent(graph, order, class_of):
        return False
    return not spec.strong or consistent(graph, list(order)[::-1], class_of)


def brute_force_value(graph: Graph, spec: VariantSpec) -> int:
    """Minimum class count over every (order, partition) pair."""
    if graph.n == 0:
        return 0
    best = graph.n
    for order in permutations(range(graph.n)):
        candidates = segmentations(order) if spec.precedence else set_partitions(list(order))
        for classes in candidates:
            if len(classes) < best and satisfies(graph, order, classes, spec):
                best = len(classes)
    return best


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pair for bit, pair in enumerate(pairs) if mask >> bit & 1])


def graphs_up_to(n: int) -> Iterator[Graph]:
    for size in range(1, n + 1):
        yield from all_graphs(size)
