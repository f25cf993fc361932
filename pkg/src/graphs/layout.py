"""Layouts (vertex order plus ordered partition) and their verification.

A layout certifies one of twelve thinness variants. A variant fixes three
things: the consistency mode (the order alone, or the order and its
reversal), whether classes must be contiguous in the order (precedence) and
whether classes must be independent sets or cliques.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterable, Optional, Sequence

from pydantic import BaseModel

from ..core.errors import LayoutError, ThinnessError
from .graph import Graph

logger = logging.getLogger(__name__)


class Consistency(str, Enum):
    CONSISTENT = "consistent"
    STRONG = "strong"


class ClassConstraint(str, Enum):
    ANY = "any"
    INDEPENDENT = "independent"
    COMPLETE = "complete"


_BASE_NAMES = {
    (Consistency.CONSISTENT, False): 'thin',
    (Consistency.STRONG, False): 'pthin',
    (Consistency.CONSISTENT, True): 'fp',
    (Consistency.STRONG, True): 'fpp',
}
_CONSTRAINT_PREFIX = {
    ClassConstraint.ANY: '',
    ClassConstraint.INDEPENDENT: 'ind',
    ClassConstraint.COMPLETE: 'comp',
}


@dataclass(frozen=True)
class VariantSpec:
    """One of the twelve thinness variants."""
    consistency: Consistency = Consistency.CONSISTENT
    precedence: bool = False
    class_constraint: ClassConstraint = ClassConstraint.ANY

    @property
    def strong(self) -> bool:
        return self.consistency is Consistency.STRONG

    @property
    def name(self) -> str:
        return _CONSTRAINT_PREFIX[self.class_constraint] + _BASE_NAMES[(self.consistency, self.precedence)]

    def relaxes(self, other: 'VariantSpec') -> bool:
        """True when every layout valid for ``other`` is also valid for ``self``."""
        if self.strong and not other.strong:
            return False
        if self.precedence and not other.precedence:
            return False
        return self.class_constraint in (ClassConstraint.ANY, other.class_constraint)

    def __str__(self) -> str:
        return self.name


VARIANTS: dict[str, VariantSpec] = {
    spec.name: spec
    for spec in (
        VariantSpec(consistency, precedence, constraint)
        for constraint in ClassConstraint
        for precedence in (False, True)
        for consistency in Consistency
    )
}


def variant(name: str) -> VariantSpec:
    """Look up a variant by its parameter name (``thin``, ``indfpp``, ...)."""
    try:
        return VARIANTS[name]
    except KeyError:
        raise ThinnessError(f"Unknown variant: {name} (expected one of {', '.join(VARIANTS)})") from None


class LayoutPayload(BaseModel):
    """JSON shape of a layout."""
    order: list[int]
    classes: list[list[int]]


class Layout:
    """A vertex order together with an ordered partition into classes.

    Members of each class are kept sorted by their position in the order.
    """

    __slots__ = ('order', 'classes', '_pos', '_class_of')

    def __init__(self, order: Iterable[int], classes: Iterable[Iterable[int]]):
        self.order: tuple[int, ...] = tuple(order)
        pos = {v: p for p, v in enumerate(self.order)}
        if len(pos) != len(self.order):
            raise LayoutError("Order lists a vertex more than once")
        class_of: dict[int, int] = {}
        sorted_classes = []
        for index, members in enumerate(classes):
            members = list(members)
            if not members:
                raise LayoutError(f"Class {index} is empty")
            for v in members:
                if v not in pos:
                    raise LayoutError(f"Vertex {v} of class {index} is missing from the order")
                if v in class_of:
                    raise LayoutError(f"Vertex {v} belongs to classes {class_of[v]} and {index}")
                class_of[v] = index
            sorted_classes.append(tuple(sorted(members, key=pos.__getitem__)))
        if len(class_of) != len(pos):
            missing = sorted(set(pos) - set(class_of))
            raise LayoutError(f"Vertices {missing} are not in any class")
        self.classes: tuple[tuple[int, ...], ...] = tuple(sorted_classes)
        self._pos = pos
        self._class_of = class_of

    @classmethod
    def from_sequence(cls, classes: Sequence[Sequence[int]]) -> 'Layout':
        """Precedence layout whose order is the concatenation of ``classes``."""
        return cls([v for members in classes for v in members], classes)

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def width(self) -> int:
        return len(self.classes)

    def position(self, v: int) -> int:
        return self._pos[v]

    def class_of(self, v: int) -> int:
        return self._class_of[v]

    def check_for(self, graph: Graph) -> None:
        """Raise ``LayoutError`` unless the order is a permutation of ``graph``'s vertices."""
        if self.n != graph.n or any(not 0 <= v < graph.n for v in self.order):
            raise LayoutError(f"Layout over {self.n} vertices does not match a graph with {graph.n} vertices")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Layout):
            return NotImplemented
        return self.order == other.order and self.classes == other.classes

    def __hash__(self) -> int:
        return hash((self.order, self.classes))

    def __repr__(self) -> str:
        return f"Layout(order={list(self.order)}, classes={[list(c) for c in self.classes]})"

    def to_dict(self) -> dict[str, Any]:
        return {'order': list(self.order), 'classes': [list(c) for c in self.classes]}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> 'Layout':
        payload = LayoutPayload.model_validate(data)
        return cls(payload.order, payload.classes)


@dataclass(frozen=True)
class BreakingTriple:
    """Vertices ``r < s < t`` with r, s in one class, r ~ t and s !~ t.

    When ``reversed`` is set the comparison is in the reversed order.
    """
    r: int
    s: int
    t: int
    reversed: bool = False

    def holds_in(self, graph: Graph, layout: Layout) -> bool:
        pr, ps, pt = (layout.position(x) for x in (self.r, self.s, self.t))
        if self.reversed:
            pr, ps, pt = -pr, -ps, -pt
        return (
            pr < ps < pt
            and layout.class_of(self.r) == layout.class_of(self.s)
            and graph.has_edge(self.r, self.t)
            and not graph.has_edge(self.s, self.t)
        )

    def to_dict(self) -> dict[str, Any]:
        return {'r': self.r, 's': self.s, 't': self.t, 'reversed': self.reversed}


@dataclass
class Verdict:
    """Outcome of a check; falsy when the check failed."""
    ok: bool
    check: Optional[str] = None
    triple: Optional[BreakingTriple] = None
    detail: str = ""
    extra: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {'ok': self.ok}
        if self.check:
            data['check'] = self.check
        if self.triple:
            data['triple'] = self.triple.to_dict()
        if self.detail:
            data['detail'] = self.detail
        data.update(self.extra)
        return data


def _first_breaking_triple(graph: Graph, order: Sequence[int], class_of: dict[int, int], width: int):
    """Sweep ``order``; return ``(r, s, t)`` minimizing positions of (t, s, r), or None."""
    step = {v: p for p, v in enumerate(order)}
    placed: list[list[int]] = [[] for _ in range(width)]
    for t in order:
        adj_t = graph.adj(t)
        best = None
        for members in placed:
            # earlier class members adjacent to t must form a suffix
            r = None
            for member in members:
                if (adj_t >> member) & 1:
                    if r is None:
                        r = member
                elif r is not None:
                    key = (step[member], step[r])
                    if best is None or key < best[0]:
                        best = (key, r, member)
                    break
        if best is not None:
            return best[1], best[2], t
        placed[class_of[t]].append(t)
    return None


def is_consistent(graph: Graph, layout: Layout) -> Verdict:
    """Check that no triple breaks consistency under the layout's order."""
    layout.check_for(graph)
    found = _first_breaking_triple(graph, layout.order, layout._class_of, layout.width)
    if found is None:
        return Verdict(True)
    r, s, t = found
    return Verdict(False, 'consistency', BreakingTriple(r, s, t), f"({r}, {s}, {t}) breaks consistency")


def is_strongly_consistent(graph: Graph, layout: Layout) -> Verdict:
    """Check consistency of the order and of its reversal."""
    forward = is_consistent(graph, layout)
    if not forward:
        forward.check = 'strong'
        return forward
    found = _first_breaking_triple(graph, layout.order[::-1], layout._class_of, layout.width)
    if found is None:
        return Verdict(True)
    r, s, t = found
    return Verdict(
        False, 'strong', BreakingTriple(r, s, t, reversed=True),
        f"({r}, {s}, {t}) breaks consistency of the reversed order",
    )


def check_strong_via_neighborhoods(graph: Graph, layout: Layout) -> Verdict:
    """Strong consistency as: N[v] meets every class plus v in a consecutive run."""
    layout.check_for(graph)
    for v in layout.order:
        closed = graph.closed_adj(v)
        for index, members in enumerate(layout.classes):
            pool = sorted(set(members) | {v}, key=layout.position)
            inside = [(closed >> u) & 1 for u in pool]
            runs = sum(1 for p, bit in enumerate(inside) if bit and (p == 0 or not inside[p - 1]))
            if runs > 1:
                return Verdict(
                    False, 'neighborhoods',
                    detail=f"N[{v}] is not consecutive in class {index} plus {v}",
                    extra={'vertex': v, 'class': index},
                )
    return Verdict(True)


def is_precedence(layout: Layout) -> bool:
    """True when classes occupy consecutive runs of the order, in list order."""
    indices = [layout.class_of(v) for v in layout.order]
    return all(a <= b for a, b in zip(indices, indices[1:]))


def classes_independent(graph: Graph, layout: Layout) -> bool:
    return all(graph.is_independent(members) for members in layout.classes)


def classes_complete(graph: Graph, layout: Layout) -> bool:
    return all(graph.is_clique(members) for members in layout.classes)


def verify(graph: Graph, layout: Layout, spec: VariantSpec) -> Verdict:
    """Check every requirement of ``spec``; the verdict names the first one violated."""
    verdict = is_strongly_consistent(graph, layout) if spec.strong else is_consistent(graph, layout)
    if not verdict:
        return verdict
    if spec.precedence and not is_precedence(layout):
        return Verdict(False, 'precedence', detail="classes are not consecutive in the order")
    if spec.class_constraint is ClassConstraint.INDEPENDENT:
        for index, members in enumerate(layout.classes):
            if not graph.is_independent(members):
                return Verdict(False, 'independent', detail=f"class {index} is not an independent set",
                               extra={'class': index})
    elif spec.class_constraint is ClassConstraint.COMPLETE:
        for index, members in enumerate(layout.classes):
            if not graph.is_clique(members):
                return Verdict(False, 'complete', detail=f"class {index} is not a complete set",
                               extra={'class': index})
    return Verdict(True, extra={'width': layout.width})


def width(layout: Layout) -> int:
    return layout.width


def reverse(layout: Layout) -> Layout:
    """Reverse the order and the class sequence."""
    return Layout(layout.order[::-1], layout.classes[::-1])


def restrict(layout: Layout, vertices: Iterable[int]) -> Layout:
    """Drop vertices outside ``vertices`` and relabel the rest like ``induced_subgraph``."""
    keep = sorted(set(vertices))
    mapping = {old: new for new, old in enumerate(keep)}
    order = [mapping[v] for v in layout.order if v in mapping]
    classes = [[mapping[v] for v in members if v in mapping] for members in layout.classes]
    return Layout(order, [c for c in classes if c])


def complement_dual(layout: Layout) -> Layout:
    """Keep the class sequence and reverse the order inside each class.

    Applied to an independent precedence layout of a graph, the result is a
    complete precedence layout of its complement, with the same consistency.
    """
    if not is_precedence(layout):
        raise LayoutError("Duality transform needs a precedence layout")
    return Layout.from_sequence([members[::-1] for members in layout.classes])
