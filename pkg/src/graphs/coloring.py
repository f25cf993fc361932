"""Ordered patterns, perfect orders, greedy coloring and the mu-coloring reductions.

An order is *interval* when no a < b < c has a ~ c and b !~ c, and *proper
interval* when additionally no a < b < c has a ~ c and a !~ b. An order is
*perfect* when no induced path a-b-c-d has a < b and d < c; greedy coloring
along a perfect order is optimal.
"""
import logging
import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from pydantic import BaseModel

from ..core.errors import ConstructionError, InstanceError, LayoutError
from .graph import Graph, induced_subgraph, iter_bits, random_proper_interval_graph
from .layout import BreakingTriple, Layout, Verdict, is_precedence, is_strongly_consistent, variant, verify

logger = logging.getLogger(__name__)


def _positions(graph: Graph, order: Sequence[int]) -> list[int]:
    """Position of every vertex; raises ``LayoutError`` unless ``order`` is a permutation."""
    if sorted(order) != list(graph.vertices):
        raise LayoutError(f"Order {list(order)} is not a permutation of 0..{graph.n - 1}")
    pos = [0] * graph.n
    for p, v in enumerate(order):
        pos[v] = p
    return pos


def _interval_violation(graph: Graph, order: Sequence[int], proper: bool) -> Optional[BreakingTriple]:
    _positions(graph, order)
    prefix = [0]
    for v in order:
        prefix.append(prefix[-1] | (1 << v))
    for k, c in enumerate(order):
        for i in range(k):
            a = order[i]
            if not graph.has_edge(a, c):
                continue
            between = prefix[k] & ~prefix[i + 1]
            far = between & ~graph.adj(c)
            if far:
                b = min(iter_bits(far), key=order.index)
                return BreakingTriple(a, b, c)
            if proper:
                near = between & ~graph.adj(a)
                if near:
                    b = min(iter_bits(near), key=order.index)
                    return BreakingTriple(c, b, a, reversed=True)
    return None


def verify_interval_order(graph: Graph, order: Sequence[int]) -> Verdict:
    triple = _interval_violation(graph, order, proper=False)
    if triple is None:
        return Verdict(True)
    return Verdict(False, 'interval', triple, f"{triple.r} ~ {triple.t} jumps over {triple.s}")


def verify_proper_interval_order(graph: Graph, order: Sequence[int]) -> Verdict:
    triple = _interval_violation(graph, order, proper=True)
    if triple is None:
        return Verdict(True)
    return Verdict(False, 'proper-interval', triple, f"{triple.r} ~ {triple.t} jumps over {triple.s}")


def verify_perfect_order(graph: Graph, order: Sequence[int]) -> Verdict:
    """Look for an induced P4 a-b-c-d with a before b and d before c."""
    pos = _positions(graph, order)
    for x, y in graph.edges():
        for b, c in ((x, y), (y, x)):
            ends_a = graph.adj(b) & ~graph.closed_adj(c)
            ends_d = graph.adj(c) & ~graph.closed_adj(b)
            for a in iter_bits(ends_a):
                if pos[a] > pos[b]:
                    continue
                for d in iter_bits(ends_d & ~graph.adj(a)):
                    if pos[d] < pos[c]:
                        return Verdict(
                            False, 'perfect',
                            detail=f"induced path {a}-{b}-{c}-{d} with {a} < {b} and {d} < {c}",
                            extra={'p4': [a, b, c, d]},
                        )
    return Verdict(True)


def build_perfect_order(graph: Graph, layout: Layout) -> list[int]:
    """Perfect order from a precedence proper layout with at most two classes.

    The first class is taken in reverse, followed by the second class.
    """
    if layout.width > 2:
        raise InstanceError(f"Expected at most 2 classes, got {layout.width}")
    try:
        verdict = verify(graph, layout, variant('fpp'))
    except LayoutError as e:
        raise InstanceError(str(e)) from e
    if not verdict:
        raise InstanceError(f"Layout is not a precedence proper certificate: {verdict.detail}")
    first = list(layout.classes[0])
    second = list(layout.classes[1]) if layout.width == 2 else []
    return first[::-1] + second


def greedy_color(graph: Graph, order: Sequence[int]) -> list[int]:
    """Color along ``order`` with the least color (from 1) unused by colored neighbors."""
    _positions(graph, order)
    colors = [0] * graph.n
    for v in order:
        taken = {colors[u] for u in iter_bits(graph.adj(v))}
        color = 1
        while color in taken:
            color += 1
        colors[v] = color
    return colors


class MuPayload(BaseModel):
    """JSON shape of color bounds: ``{"mu": [2, 1, 3]}``."""
    mu: list[int]


@dataclass
class MuInstance:
    """A graph, a proper interval order of it and per-vertex color bounds.

    Bounds above ``n`` are lowered to ``n``; this keeps feasibility unchanged.
    """
    graph: Graph
    order: list[int]
    mu: list[int] = field(default_factory=list)

    def __post_init__(self):
        n = self.graph.n
        if len(self.mu) != n:
            raise InstanceError(f"Expected {n} color bounds, got {len(self.mu)}")
        if any(bound < 1 for bound in self.mu):
            raise InstanceError("Color bounds must be positive")
        try:
            verdict = verify_proper_interval_order(self.graph, self.order)
        except LayoutError as e:
            raise InstanceError(str(e)) from e
        if not verdict:
            raise InstanceError(f"Order is not proper interval: {verdict.detail}")
        self.order = list(self.order)
        self.mu = [min(bound, n) for bound in self.mu]

    @property
    def n(self) -> int:
        return self.graph.n


def reduce_gprime(inst: MuInstance) -> tuple[Graph, Layout]:
    """Add a clique w_1..w_n where v ~ w_i iff mu(v) < i.

    The result is n-colorable iff the instance is mu-colorable, and comes
    with a precedence layout of two classes: the clique, then V(G).
    """
    n = inst.n
    edges = list(inst.graph.edges())
    clique = [n + i for i in range(n)]
    edges += [(a, b) for x, a in enumerate(clique) for b in clique[x + 1:]]
    edges += [(v, clique[i - 1]) for v in inst.graph.vertices for i in range(1, n + 1) if inst.mu[v] < i]
    graph = Graph(2 * n, edges)
    layout = Layout(clique + inst.order, [clique, inst.order])
    logger.debug(f"Reduced mu-instance on {n} vertices to a graph with {graph.num_edges} edges")
    return graph, layout


def reduce_gdoubleprime(inst: MuInstance) -> tuple[Graph, Layout]:
    """Attach an n x n proper interval gadget B where v_k ~ w^k_j iff mu(v_k) < j.

    B has n^2 vertices numbered row by row, two of them adjacent when fewer
    than n apart: its maximal cliques are the rows w^i_1..w^i_n and the
    windows w^i_j..w^(i+1)_(j-1). The order is row 1
    of B, v_1, row 2 of B, v_2, ... and the classes are V(G) and B.
    """
    n = inst.n

    def gadget(i: int, j: int) -> int:
        return n + (i - 1) * n + (j - 1)

    size = n * n
    edges = list(inst.graph.edges())
    edges += [(n + p, n + q) for p in range(size) for q in range(p + 1, min(size, p + n))]
    for k, v in enumerate(inst.order, start=1):
        edges += [(v, gadget(k, j)) for j in range(1, n + 1) if inst.mu[v] < j]
    graph = Graph(n + size, edges)

    gadget_order = [n + p for p in range(size)]
    block, mapping = induced_subgraph(graph, gadget_order)
    if not verify_proper_interval_order(block, [mapping[b] for b in gadget_order]):
        raise ConstructionError("Gadget order is not proper interval")

    order = []
    for k, v in enumerate(inst.order, start=1):
        order += [gadget(k, j) for j in range(1, n + 1)]
        order.append(v)
    return graph, Layout(order, [inst.order, gadget_order])


def random_precedence_proper_2thin(n: int, seed: Optional[int] = None) -> tuple[Graph, Layout]:
    """Two proper interval blocks glued into a precedence proper 2-thin graph.

    A vertex of the second block sees a suffix of the first block, and those
    suffixes only shrink along the second block.
    """
    if n < 1:
        raise InstanceError(f"Need at least one vertex, got {n}")
    rng = random.Random(seed)
    if n == 1:
        return Graph(1), Layout([0], [[0]])
    size = rng.randint(1, n - 1)
    first, _ = random_proper_interval_graph(size, seed=rng.randrange(1 << 30))
    second, _ = random_proper_interval_graph(n - size, seed=rng.randrange(1 << 30))
    edges = list(first.edges())
    edges += [(size + u, size + v) for u, v in second.edges()]
    starts = sorted(rng.randint(0, size) for _ in range(n - size))
    edges += [(u, size + t) for t, start in enumerate(starts) for u in range(start, size)]
    graph = Graph(n, edges)
    layout = Layout.from_sequence([range(size), range(size, n)])
    if not is_strongly_consistent(graph, layout) or not is_precedence(layout):
        raise ConstructionError("Glued blocks do not form a precedence proper layout")
    return graph, layout
