"""Graph representation, family generators and graph operators.

Vertices are dense integers ``0..n-1``. Adjacency is stored as one Python
int per vertex, used as a bitset, so that ``has_edge`` is a shift and a mask
and neighborhood intersections are a single ``&``.
"""
import logging
import random
from dataclasses import dataclass
from typing import Any, Iterable, Iterator, Optional

import networkx as nx
from pydantic import BaseModel, Field

from ..core.errors import GraphError

logger = logging.getLogger(__name__)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class GraphPayload(BaseModel):
    """JSON shape of a graph: ``{"n": 3, "edges": [[0, 1], [1, 2]]}``."""
    n: int = Field(ge=0)
    edges: list[tuple[int, int]] = []


class Graph:
    """Immutable undirected simple graph."""

    __slots__ = ('_n', '_adj')

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"Vertex count must be non-negative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"Edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise GraphError(f"Self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._n = n
        self._adj = tuple(adj)

    @classmethod
    def from_adjacency(cls, adj: Iterable[int]) -> 'Graph':
        """Build a graph directly from symmetric bitset rows."""
        graph = cls.__new__(cls)
        graph._adj = tuple(adj)
        graph._n = len(graph._adj)
        return graph

    @property
    def n(self) -> int:
        return self._n

    @property
    def vertices(self) -> range:
        return range(self._n)

    def adj(self, v: int) -> int:
        """Open neighborhood of ``v`` as a bitset."""
        return self._adj[v]

    def closed_adj(self, v: int) -> int:
        """Closed neighborhood of ``v`` as a bitset."""
        return self._adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return (self._adj[u] >> v) & 1 == 1

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        return [
            (u, v)
            for u in range(self._n)
            for v in iter_bits(self._adj[u] >> (u + 1) << (u + 1))
        ]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self._adj) // 2

    def is_complete(self) -> bool:
        return self.num_edges == self._n * (self._n - 1) // 2

    def is_clique(self, vertices: Iterable[int]) -> bool:
        members = list(vertices)
        mask = 0
        for v in members:
            mask |= 1 << v
        return all(self.closed_adj(v) & mask == mask for v in members)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        members = list(vertices)
        mask = 0
        for v in members:
            mask |= 1 << v
        return all(self._adj[v] & mask == 0 for v in members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.num_edges})"

    def to_dict(self) -> dict[str, Any]:
        return {'n': self._n, 'edges': [list(e) for e in self.edges()]}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> 'Graph':
        """Parse the JSON graph format; edge endpoints may come in any order."""
        payload = GraphPayload.model_validate(data)
        return cls(payload.n, payload.edges)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self._n))
        g.add_edges_from(self.edges())
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> 'Graph':
        """Convert a networkx graph, relabeling nodes by sorted order."""
        nodes = sorted(g.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls(len(nodes), ((index[u], index[v]) for u, v in g.edges() if u != v))


@dataclass(frozen=True)
class CrownLabeling:
    """Side and index of every vertex of a crown (or any 2n-vertex matched family).

    ``v_i`` is vertex ``i - 1`` and ``v'_i`` is vertex ``n + i - 1``.
    """
    n: int

    def v(self, i: int) -> int:
        return i - 1

    def vp(self, i: int) -> int:
        return self.n + i - 1

    @property
    def side_a(self) -> list[int]:
        return list(range(self.n))

    @property
    def side_b(self) -> list[int]:
        return list(range(self.n, 2 * self.n))

    def mirror(self, v: int) -> int:
        return v + self.n if v < self.n else v - self.n

    def side(self, v: int) -> str:
        return 'A' if v < self.n else 'B'

    def index(self, v: int) -> int:
        """1-based index of ``v`` within its side."""
        return v % self.n + 1

    def name(self, v: int) -> str:
        return f"v{self.index(v)}" if v < self.n else f"v'{self.index(v)}"

    def check(self, graph: Graph) -> None:
        """Raise ``GraphError`` unless ``graph`` is the crown this labeling describes."""
        if graph.n != 2 * self.n:
            raise GraphError(f"Crown labeling for n={self.n} needs {2 * self.n} vertices, got {graph.n}")
        if graph != crown(self.n)[0]:
            raise GraphError(f"Graph is not CR_{self.n} under the standard labeling")


@dataclass(frozen=True)
class GridLabeling:
    """Row/column coordinates of grid vertices; ``(i, j)`` is vertex ``(i-1)*cols + (j-1)``."""
    rows: int
    cols: int

    def vertex(self, i: int, j: int) -> int:
        return (i - 1) * self.cols + (j - 1)

    def coord(self, v: int) -> tuple[int, int]:
        return v // self.cols + 1, v % self.cols + 1

    def contains(self, i: int, j: int) -> bool:
        return 1 <= i <= self.rows and 1 <= j <= self.cols


def _require_positive(name: str, value: int) -> None:
    if value < 1:
        raise GraphError(f"{name} must be at least 1, got {value}")


def crown(n: int) -> tuple[Graph, CrownLabeling]:
    """K_{n,n} minus a perfect matching."""
    _require_positive('n', n)
    labels = CrownLabeling(n)
    edges = [(labels.v(i), labels.vp(j)) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    return Graph(2 * n, edges), labels


def grid(n: int, m: int) -> tuple[Graph, GridLabeling]:
    """The n x m grid graph."""
    _require_positive('rows', n)
    _require_positive('cols', m)
    labels = GridLabeling(n, m)
    edges = []
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            if j < m:
                edges.append((labels.vertex(i, j), labels.vertex(i, j + 1)))
            if i < n:
                edges.append((labels.vertex(i, j), labels.vertex(i + 1, j)))
    return Graph(n * m, edges), labels


def complete(n: int) -> Graph:
    _require_positive('n', n)
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def complete_bipartite(p: int, q: int) -> Graph:
    _require_positive('p', p)
    _require_positive('q', q)
    return Graph(p + q, ((u, p + v) for u in range(p) for v in range(q)))


def matching_nk2(n: int) -> Graph:
    """n disjoint edges; ``v_i = i - 1`` is matched to ``w_i = n + i - 1``."""
    _require_positive('n', n)
    return Graph(2 * n, ((i, n + i) for i in range(n)))


def path(n: int) -> Graph:
    _require_positive('n', n)
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def random_graph(n: int, p: float = 0.5, seed: Optional[int] = None) -> Graph:
    """Erdos-Renyi G(n, p) sample."""
    if n < 0:
        raise GraphError(f"Vertex count must be non-negative, got {n}")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"Edge probability must lie in [0, 1], got {p}")
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def random_proper_interval_graph(n: int, seed: Optional[int] = None) -> tuple[Graph, list[int]]:
    """Random proper interval graph together with a proper interval order.

    Vertex ``i`` reaches forward to a non-decreasing right end, which makes
    the identity order a proper interval order.
    """
    _require_positive('n', n)
    rng = random.Random(seed)
    reach = []
    last = 0
    for i in range(n):
        last = max(last, i, min(n - 1, i + rng.randint(0, 2)))
        reach.append(last)
    edges = [(i, j) for i in range(n) for j in range(i + 1, reach[i] + 1)]
    return Graph(n, edges), list(range(n))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph.from_adjacency(full & ~g.closed_adj(v) for v in g.vertices)


def union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; the vertices of ``g2`` are shifted by ``g1.n``."""
    shift = g1.n
    rows = [g1.adj(v) for v in g1.vertices]
    rows.extend(g2.adj(v) << shift for v in g2.vertices)
    return Graph.from_adjacency(rows)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts."""
    shift = g1.n
    left = (1 << shift) - 1
    right = ((1 << g2.n) - 1) << shift
    rows = [g1.adj(v) | right for v in g1.vertices]
    rows.extend((g2.adj(v) << shift) | left for v in g2.vertices)
    return Graph.from_adjacency(rows)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``vertices``, relabeled ``0..|S|-1`` in increasing old id."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"Vertex {v} out of range for {g.n} vertices")
    mapping = {old: new for new, old in enumerate(keep)}
    edges = [
        (mapping[u], mapping[w])
        for u in keep
        for w in iter_bits(g.adj(u))
        if w in mapping and u < w
    ]
    return Graph(len(keep), edges), mapping
