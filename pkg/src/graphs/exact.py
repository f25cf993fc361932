"""Exact oracles for small graphs: thinness variants and colorings.

For a fixed vertex order, two vertices *conflict* when they cannot share a
class. Valid classes are exactly the conflict-free sets, so the minimum class
count for an order is the chromatic number of the conflict graph, or for
precedence variants the number of greedy maximal segments. The search walks
all orders in lexicographic order and prunes with lower bounds that only grow
as the prefix grows.
"""
import concurrent.futures
import logging
import multiprocessing
import time
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

import networkx as nx

from ..core.errors import GraphError, InstanceError, ThinnessError
from .graph import Graph, iter_bits
from .layout import ClassConstraint, Layout, VariantSpec

logger = logging.getLogger(__name__)

_UNBOUNDED = 1 << 30


def _conflict_rows(graph: Graph, order: Sequence[int], spec: VariantSpec) -> list[int]:
    n = graph.n
    rows = [0] * n
    after = (1 << n) - 1
    before = 0
    before_of = {}
    for u in order:
        before_of[u] = before
        before |= 1 << u
    for p, v in enumerate(order):
        after &= ~(1 << v)
        for u in order[:p]:
            if _pair_conflicts(graph, u, v, after, before_of[u], spec):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return rows


def _pair_conflicts(graph: Graph, u: int, v: int, after_v: int, before_u: int, spec: VariantSpec) -> bool:
    """Conflict test for ``u`` placed before ``v``."""
    adj_u, adj_v = graph.adj(u), graph.adj(v)
    if adj_u & ~adj_v & after_v:
        return True
    if spec.strong and adj_v & ~adj_u & before_u:
        return True
    if spec.class_constraint is ClassConstraint.INDEPENDENT:
        return (adj_u >> v) & 1 == 1
    if spec.class_constraint is ClassConstraint.COMPLETE:
        return (adj_u >> v) & 1 == 0
    return False


def conflict_graph(graph: Graph, order: Sequence[int], spec: VariantSpec) -> Graph:
    """Pairs that may not share a class under ``order`` for a non-precedence variant."""
    if spec.precedence:
        raise ThinnessError("Conflict graphs describe non-precedence variants; use min_classes_for_order")
    if sorted(order) != list(graph.vertices):
        raise GraphError("Order is not a permutation of the graph's vertices")
    return Graph.from_adjacency(_conflict_rows(graph, order, spec))


def _segments(order: Sequence[int], rows: Sequence[int]) -> list[list[int]]:
    segments: list[list[int]] = []
    mask = 0
    for v in order:
        if not segments or rows[v] & mask:
            segments.append([])
            mask = 0
        segments[-1].append(v)
        mask |= 1 << v
    return segments


def min_classes_for_order(graph: Graph, order: Sequence[int], spec: VariantSpec) -> tuple[int, Layout]:
    """Fewest classes any partition needs to satisfy ``spec`` with this order."""
    if sorted(order) != list(graph.vertices):
        raise GraphError("Order is not a permutation of the graph's vertices")
    rows = _conflict_rows(graph, order, spec)
    if spec.precedence:
        classes = _segments(order, rows)
    else:
        k, colors = _chromatic(rows)
        classes = [[v for v in order if colors[v] == c] for c in range(k)]
    return len(classes), Layout(order, classes)


# ---------------------------------------------------------------- colorings

def _max_clique(rows: Sequence[int], candidates: int) -> int:
    """Size of a largest clique inside ``candidates``."""
    best = 0

    def expand(size: int, pool: int) -> None:
        nonlocal best
        if not pool:
            best = max(best, size)
            return
        while pool:
            if size + pool.bit_count() <= best:
                return
            low = pool & -pool
            v = low.bit_length() - 1
            pool ^= low
            expand(size + 1, pool & rows[v])

    expand(0, candidates)
    return best


def _k_color(rows: Sequence[int], k: int, sequence: Sequence[int]) -> Optional[list[int]]:
    n = len(rows)
    colors = [-1] * n
    # bitset of vertices holding each color
    holders = [0] * k

    def rec(index: int, used: int) -> bool:
        if index == len(sequence):
            return True
        v = sequence[index]
        for c in range(min(used + 1, k)):
            if holders[c] & rows[v]:
                continue
            colors[v] = c
            holders[c] |= 1 << v
            if rec(index + 1, max(used, c + 1)):
                return True
            holders[c] &= ~(1 << v)
        colors[v] = -1
        return False

    return colors if rec(0, 0) else None


def _chromatic(rows: Sequence[int], lower: int = 0, limit: int = _UNBOUNDED) -> tuple[int, Optional[list[int]]]:
    """Chromatic number of a bitset graph, searching only values below ``limit``.

    Returns ``(limit, None)`` when no coloring with fewer than ``limit`` colors exists.
    """
    n = len(rows)
    if n == 0:
        return 0, []
    sequence = sorted(range(n), key=lambda v: (-rows[v].bit_count(), v))
    start = max(lower, 1, _max_clique(rows, (1 << n) - 1))
    for k in range(start, min(limit, n + 1)):
        colors = _k_color(rows, k, sequence)
        if colors is not None:
            return k, colors
    return limit, None


def _rows(graph: Graph) -> list[int]:
    return [graph.adj(v) for v in graph.vertices]


def find_k_coloring(graph: Graph, k: int) -> Optional[list[int]]:
    """A proper coloring with colors ``0..k-1``, or None."""
    if k <= 0:
        raise ThinnessError(f"Need at least one color, got k={k}")
    rows = _rows(graph)
    sequence = list(nx.coloring.greedy_color(graph.to_networkx(), strategy='DSATUR'))
    return _k_color(rows, k, sequence)


def chromatic_number(graph: Graph) -> int:
    """Exact chromatic number, starting from the DSATUR upper bound."""
    if graph.n == 0:
        return 0
    greedy = nx.coloring.greedy_color(graph.to_networkx(), strategy='DSATUR')
    upper = max(greedy.values()) + 1
    k, _ = _chromatic(_rows(graph), limit=upper)
    return k


def find_mu_coloring(graph: Graph, mu: Sequence[int]) -> Optional[list[int]]:
    """A proper coloring with ``1 <= color(v) <= mu[v]``, or None."""
    if len(mu) != graph.n:
        raise InstanceError(f"Expected {graph.n} bounds, got {len(mu)}")
    if any(bound < 1 for bound in mu):
        raise InstanceError("Color bounds must be positive")
    sequence = sorted(graph.vertices, key=lambda v: (mu[v], -graph.degree(v), v))
    colors = [0] * graph.n

    def rec(index: int) -> bool:
        if index == len(sequence):
            return True
        v = sequence[index]
        taken = {colors[u] for u in iter_bits(graph.adj(v))}
        for c in range(1, mu[v] + 1):
            if c in taken:
                continue
            colors[v] = c
            if rec(index + 1):
                return True
        colors[v] = 0
        return False

    return list(colors) if rec(0) else None


def is_mu_colorable(graph: Graph, mu: Sequence[int]) -> bool:
    return find_mu_coloring(graph, mu) is not None


# ---------------------------------------------------------------- order search

@dataclass
class ExactResult:
    """Outcome of an exact search; ``value`` is None when the budget ran out first."""
    spec: VariantSpec
    value: Optional[int]
    layout: Optional[Layout]
    upper: Optional[int] = None
    explored: int = 0
    elapsed: float = 0.0

    @property
    def inconclusive(self) -> bool:
        return self.value is None

    def to_dict(self) -> dict[str, Any]:
        if self.inconclusive:
            data: dict[str, Any] = {'inconclusive': True, 'upper': self.upper}
        else:
            data = {'value': self.value}
        data['variant'] = self.spec.name
        if self.layout is not None:
            data['layout'] = self.layout.to_dict()
        return data


class BudgetExceeded(Exception):
    """Internal signal: the search deadline passed."""


@dataclass
class _Search:
    adj: tuple[int, ...]
    spec: VariantSpec
    deadline: Optional[float] = None
    shared: Any = None
    best: int = _UNBOUNDED
    best_order: Optional[list[int]] = None
    best_classes: Optional[list[list[int]]] = None
    nodes: int = 0
    rows: list[int] = field(default_factory=list)

    def __post_init__(self):
        self.n = len(self.adj)
        self.rows = [0] * self.n
        self.graph = Graph.from_adjacency(self.adj)

    def _bound(self) -> int:
        """Values at or above this cannot win; peers' results count only when strictly better."""
        if self.shared is None:
            return self.best
        return min(self.best, self.shared.value + 1)

    def _publish(self, value: int) -> None:
        if self.shared is None:
            return
        with self.shared.get_lock():
            if value < self.shared.value:
                self.shared.value = value

    def _tick(self) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes % 256 == 0 and time.time() > self.deadline:
            raise BudgetExceeded

    def run(self, firsts: Sequence[int]) -> None:
        full = (1 << self.n) - 1
        for first in firsts:
            if self.best <= 1:
                return
            self._extend([], {}, 0, full, first, 0, 0, 0)

    def _extend(self, prefix, before_of, placed, remaining, x, clique, segments, segment_mask):
        """Append ``x`` to ``prefix`` and continue the search below it."""
        self._tick()
        graph, spec = self.graph, self.spec
        remaining &= ~(1 << x)
        conflicts = 0
        for u in prefix:
            if _pair_conflicts(graph, u, x, remaining, before_of[u], spec):
                conflicts |= 1 << u
        if spec.precedence:
            if not prefix or conflicts & segment_mask:
                segments += 1
                segment_mask = 0
            segment_mask |= 1 << x
            bound = segments
        else:
            clique = max(clique, 1 + _max_clique(self.rows, conflicts))
            bound = clique
        if bound >= self._bound():
            return

        self.rows[x] = conflicts
        for u in iter_bits(conflicts):
            self.rows[u] |= 1 << x
        before_of[x] = placed
        prefix.append(x)
        try:
            if not remaining:
                self._leaf(prefix, bound)
            else:
                for y in iter_bits(remaining):
                    self._extend(prefix, before_of, placed | (1 << x), remaining, y, clique, segments, segment_mask)
                    if self.best <= 1:
                        break
        finally:
            prefix.pop()
            del before_of[x]
            for u in iter_bits(conflicts):
                self.rows[u] &= ~(1 << x)
            self.rows[x] = 0

    def _leaf(self, order: list[int], lower: int) -> None:
        if self.spec.precedence:
            classes = _segments(order, self.rows)
        else:
            k, colors = _chromatic(self.rows, lower=lower, limit=self._bound())
            if colors is None:
                return
            classes = [[v for v in order if colors[v] == c] for c in range(k)]
        if len(classes) < self._bound():
            self.best = len(classes)
            self.best_order = list(order)
            self.best_classes = classes
            self._publish(self.best)
            logger.debug(f"Improved {self.spec.name} bound to {self.best} with order {order}")


_shared_best = None


def _init_worker(shared) -> None:
    global _shared_best
    _shared_best = shared


def _search_first(adj, spec: VariantSpec, first: int, deadline: Optional[float]):
    search = _Search(adj, spec, deadline=deadline, shared=_shared_best)
    expired = False
    try:
        search.run([first])
    except BudgetExceeded:
        expired = True
    return first, search.best, search.best_order, search.best_classes, search.nodes, expired


def exact_value(
    graph: Graph,
    spec: VariantSpec,
    budget_ms: Optional[int] = None,
    jobs: int = 1,
) -> ExactResult:
    """Minimum class count over all orders, with a witness layout.

    Ties are broken by the lexicographically smallest order, so the result is
    the same for any number of ``jobs``. When ``budget_ms`` runs out the
    result is inconclusive and carries the best layout found so far.
    """
    started = time.time()
    deadline = started + budget_ms / 1000 if budget_ms is not None else None
    adj = tuple(graph.adj(v) for v in graph.vertices)
    if graph.n == 0:
        return ExactResult(spec, 0, Layout([], []))

    outcomes = []
    if jobs <= 1 or graph.n < 4:
        search = _Search(adj, spec, deadline=deadline)
        expired = False
        try:
            search.run(list(graph.vertices))
        except BudgetExceeded:
            expired = True
        outcomes.append((0, search.best, search.best_order, search.best_classes, search.nodes, expired))
    else:
        shared = multiprocessing.Value('i', _UNBOUNDED)
        with concurrent.futures.ProcessPoolExecutor(
            max_workers=jobs, initializer=_init_worker, initargs=(shared,),
        ) as executor:
            futures = [executor.submit(_search_first, adj, spec, first, deadline) for first in graph.vertices]
            for future in futures:
                outcomes.append(future.result())

    explored = sum(o[4] for o in outcomes)
    expired = any(o[5] for o in outcomes)
    found = [o for o in outcomes if o[2] is not None]
    elapsed = time.time() - started
    if not found:
        logger.warning(f"Exact {spec.name} search found no layout within the budget")
        return ExactResult(spec, None, None, upper=None, explored=explored, elapsed=elapsed)
    _, value, order, classes, _, _ = min(found, key=lambda o: (o[1], o[0]))
    layout = Layout(order, classes)
    if expired:
        logger.warning(f"Exact {spec.name} search ran out of budget with upper bound {value}")
        return ExactResult(spec, None, layout, upper=value, explored=explored, elapsed=elapsed)
    logger.info(f"Exact {spec.name} = {value} after {explored} nodes in {elapsed:.2f}s")
    return ExactResult(spec, value, layout, upper=value, explored=explored, elapsed=elapsed)
