"""Cotree expressions: the input format for cographs.

Grammar::

    expr := '1' | '(' expr (op expr)+ ')'
    op   := '+'   (disjoint union)
          | '*'   (join)

All operators inside one pair of parentheses must agree. Leaves are numbered
``0..n-1`` from left to right, which is also how ``evaluate`` numbers the
vertices of the resulting graph.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, reduce
from typing import Optional

from networkx.utils import py_random_state

from ..core.errors import CotreeSyntaxError, ThinnessError
from .graph import Graph, join, union

logger = logging.getLogger(__name__)


class CotreeOp(str, Enum):
    LEAF = "1"
    UNION = "+"
    JOIN = "*"


@dataclass(frozen=True)
class CotreeExpr:
    """A leaf, or a union/join node with at least two children."""
    op: CotreeOp
    children: tuple['CotreeExpr', ...] = ()

    def __post_init__(self):
        if self.op is CotreeOp.LEAF and self.children:
            raise ThinnessError("A leaf has no children")
        if self.op is not CotreeOp.LEAF and len(self.children) < 2:
            raise ThinnessError(f"A '{self.op.value}' node needs at least two children")

    @property
    def is_leaf(self) -> bool:
        return self.op is CotreeOp.LEAF

    @cached_property
    def leaves(self) -> int:
        if self.is_leaf:
            return 1
        return sum(child.leaves for child in self.children)

    def __str__(self) -> str:
        if self.is_leaf:
            return "1"
        return "(" + self.op.value.join(str(child) for child in self.children) + ")"


LEAF = CotreeExpr(CotreeOp.LEAF)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> Optional[str]:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def parse(self) -> CotreeExpr:
        expr = self._expr()
        if self._peek() is not None:
            raise CotreeSyntaxError(f"Unexpected '{self.text[self.pos]}' after expression", self.pos)
        return expr

    def _expr(self) -> CotreeExpr:
        ch = self._peek()
        if ch is None:
            raise CotreeSyntaxError("Unexpected end of expression", self.pos)
        if ch == '1':
            self.pos += 1
            return LEAF
        if ch != '(':
            raise CotreeSyntaxError(f"Expected '1' or '(' but found '{ch}'", self.pos)
        self.pos += 1
        children = [self._expr()]
        op: Optional[CotreeOp] = None
        while True:
            ch = self._peek()
            if ch == ')':
                if op is None:
                    raise CotreeSyntaxError("Parenthesized expression needs an operator", self.pos)
                self.pos += 1
                return CotreeExpr(op, tuple(children))
            if ch not in ('+', '*'):
                found = "end of expression" if ch is None else f"'{ch}'"
                raise CotreeSyntaxError(f"Expected '+', '*' or ')' but found {found}", self.pos)
            if op is not None and ch != op.value:
                raise CotreeSyntaxError("Mixed operators at one level", self.pos)
            op = CotreeOp(ch)
            self.pos += 1
            children.append(self._expr())


def parse_cotree(text: str) -> CotreeExpr:
    """Parse a cotree expression such as ``((1+1)*(1+1))``."""
    return _Parser(text).parse()


def evaluate(expr: CotreeExpr) -> Graph:
    """The cograph described by ``expr``."""
    if expr.is_leaf:
        return Graph(1)
    combine = union if expr.op is CotreeOp.UNION else join
    return reduce(combine, (evaluate(child) for child in expr.children))


def is_complete_expr(expr: CotreeExpr) -> bool:
    """True iff ``evaluate(expr)`` is complete, decided on the tree."""
    if expr.is_leaf:
        return True
    if expr.op is CotreeOp.UNION:
        return False
    return all(is_complete_expr(child) for child in expr.children)


@py_random_state(1)
def random_cotree(leaves: int, seed=None) -> CotreeExpr:
    """Random cotree expression with exactly ``leaves`` leaves.

    Parameters
    ----------
    leaves : int
        Number of leaves, at least 1.
    seed : integer, random_state, or None (default)
        Indicator of random number generation state.
    """
    if leaves < 1:
        raise ThinnessError("A cotree needs at least one leaf")

    def build(count: int) -> CotreeExpr:
        if count == 1:
            return LEAF
        arity = seed.randint(2, min(count, 4))
        cuts = sorted(seed.sample(range(1, count), arity - 1))
        sizes = [b - a for a, b in zip([0] + cuts, cuts + [count])]
        op = CotreeOp.UNION if seed.randint(0, 1) == 0 else CotreeOp.JOIN
        return CotreeExpr(op, tuple(build(size) for size in sizes))

    return build(leaves)
