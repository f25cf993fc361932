"""Thinness and precedence thinness of cographs from their cotree.

Both parameters follow from the graphs a union or join is applied to:

* union: thin is the maximum over the parts, fp is the sum minus one per
  extra part (the last class of one part absorbs the first class of the next);
* join: both are the sum over the parts that are not complete, and a
  complete part is absorbed into the last class (1 if every part is complete).
"""
import logging
from typing import Any

from ..graphs.cotree import CotreeExpr, CotreeOp, evaluate, is_complete_expr, parse_cotree
from ..graphs.graph import Graph
from ..graphs.layout import Layout, VariantSpec, variant
from .base import FieldType, LayoutConstructor, ParameterField, variant_field

logger = logging.getLogger(__name__)

# (order, classes) over the global leaf numbering
_Witness = tuple[list[int], list[list[int]]]


def thin_cograph(expr: CotreeExpr) -> int:
    if expr.is_leaf:
        return 1
    if expr.op is CotreeOp.UNION:
        return max(thin_cograph(child) for child in expr.children)
    values = [thin_cograph(child) for child in expr.children if not is_complete_expr(child)]
    return sum(values) if values else 1


def fp_cograph(expr: CotreeExpr) -> int:
    if expr.is_leaf:
        return 1
    if expr.op is CotreeOp.UNION:
        values = [fp_cograph(child) for child in expr.children]
        return sum(values) - (len(values) - 1)
    values = [fp_cograph(child) for child in expr.children if not is_complete_expr(child)]
    return sum(values) if values else 1


def _children_with_offsets(expr: CotreeExpr, offset: int):
    for child in expr.children:
        yield child, offset
        offset += child.leaves


def _join_witness(expr: CotreeExpr, offset: int, recurse) -> _Witness:
    order: list[int] = []
    classes: list[list[int]] = []
    clique: list[int] = []
    for child, start in _children_with_offsets(expr, offset):
        if is_complete_expr(child):
            clique.extend(range(start, start + child.leaves))
            continue
        child_order, child_classes = recurse(child, start)
        order += child_order
        classes += child_classes
    if not classes:
        return clique, [clique]
    classes[-1] = classes[-1] + clique
    return order + clique, classes


def _thin_witness(expr: CotreeExpr, offset: int) -> _Witness:
    if expr.is_leaf:
        return [offset], [[offset]]
    if expr.op is CotreeOp.JOIN:
        return _join_witness(expr, offset, _thin_witness)
    order: list[int] = []
    classes: list[list[int]] = []
    for child, start in _children_with_offsets(expr, offset):
        child_order, child_classes = _thin_witness(child, start)
        order += child_order
        for index, members in enumerate(child_classes):
            if index == len(classes):
                classes.append([])
            classes[index] += members
    return order, classes


def _fp_witness(expr: CotreeExpr, offset: int) -> _Witness:
    if expr.is_leaf:
        return [offset], [[offset]]
    if expr.op is CotreeOp.JOIN:
        return _join_witness(expr, offset, _fp_witness)
    classes: list[list[int]] = []
    for child, start in _children_with_offsets(expr, offset):
        _, child_classes = _fp_witness(child, start)
        if classes:
            classes[-1] = classes[-1] + child_classes[0]
            classes += child_classes[1:]
        else:
            classes = list(child_classes)
    return [v for members in classes for v in members], classes


def witness_thin(expr: CotreeExpr) -> Layout:
    """Consistent layout of ``evaluate(expr)`` with ``thin_cograph(expr)`` classes."""
    order, classes = _thin_witness(expr, 0)
    return Layout(order, classes)


def witness_fp(expr: CotreeExpr) -> Layout:
    """Precedence layout of ``evaluate(expr)`` with ``fp_cograph(expr)`` classes."""
    _, classes = _fp_witness(expr, 0)
    return Layout.from_sequence(classes)


class CographConstructor(LayoutConstructor):
    """Witness layouts for cographs given as cotree expressions."""

    constructor_id = "cograph"
    constructor_name = "Cograph"
    constructor_description = "Thin or fp witness of a cograph built by unions and joins"

    @classmethod
    def get_parameter_fields(cls) -> list[ParameterField]:
        return [
            ParameterField(
                name='expr',
                label='Cotree expression',
                field_type=FieldType.TEXT,
                help_text="e.g. ((1+1)*(1+1))",
            ),
            variant_field(default='thin', choices=['thin', 'fp']),
        ]

    @classmethod
    def variant(cls, params: dict[str, Any]) -> VariantSpec:
        return variant(params.get('variant') or 'thin')

    @classmethod
    def build_graph(cls, params: dict[str, Any]) -> Graph:
        return evaluate(parse_cotree(params['expr']))

    @classmethod
    def build_layout(cls, params: dict[str, Any]) -> Layout:
        expr = parse_cotree(params['expr'])
        layout = witness_fp(expr) if cls.variant(params).precedence else witness_thin(expr)
        logger.debug(f"Built {cls.variant(params)} witness with {layout.width} classes for {expr}")
        return layout

    @classmethod
    def expected_width(cls, params: dict[str, Any]) -> int:
        expr = parse_cotree(params['expr'])
        return fp_cograph(expr) if cls.variant(params).precedence else thin_cograph(expr)
