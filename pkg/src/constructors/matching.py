"""Matchings, cocktail-party graphs and crown complements.

These families separate the class-constrained variants of a graph from those
of its complement: nK_2 has independent proper thinness 2 while its
complement needs n complete classes, and the complement of CR_n has complete
proper thinness 2 while CR_n needs n independent classes.
"""
import logging
from typing import Any

from ..graphs.graph import Graph, complement, crown, matching_nk2
from ..graphs.layout import Layout, VariantSpec, variant
from .base import LayoutConstructor, ParameterField

logger = logging.getLogger(__name__)


def matching_layout(n: int) -> Layout:
    """Order v1, w1, ..., vn, wn with classes V and W."""
    order = [x for i in range(n) for x in (i, n + i)]
    return Layout(order, [range(n), range(n, 2 * n)])


def cocktail_party_layout(n: int) -> Layout:
    """Order v1..vn, w1..wn with complete classes {v1, wn} and {v_i, w_(i-1)}."""
    order = list(range(2 * n))
    classes = [[0, 2 * n - 1]] + [[i, n + i - 1] for i in range(1, n)]
    return Layout(order, classes)


def crown_complement_layout(n: int) -> Layout:
    """Order v1, v'1, ..., vn, v'n with the two sides as classes."""
    order = [x for i in range(n) for x in (i, n + i)]
    return Layout(order, [range(n), range(n, 2 * n)])


class MatchingConstructor(LayoutConstructor):
    constructor_id = "matching"
    constructor_name = "Matching"
    constructor_description = "n disjoint edges, independent proper layout with 2 classes"

    @classmethod
    def get_parameter_fields(cls) -> list[ParameterField]:
        return [ParameterField(name='n', label='Edges', minimum=1)]

    @classmethod
    def variant(cls, params: dict[str, Any]) -> VariantSpec:
        return variant('indpthin')

    @classmethod
    def build_graph(cls, params: dict[str, Any]) -> Graph:
        return matching_nk2(params['n'])

    @classmethod
    def build_layout(cls, params: dict[str, Any]) -> Layout:
        return matching_layout(params['n'])

    @classmethod
    def expected_width(cls, params: dict[str, Any]) -> int:
        return 2


class CocktailPartyConstructor(LayoutConstructor):
    constructor_id = "cocktail-party"
    constructor_name = "Cocktail party"
    constructor_description = "Complement of n disjoint edges, complete proper layout with n classes"

    @classmethod
    def get_parameter_fields(cls) -> list[ParameterField]:
        return [ParameterField(name='n', label='Pairs', minimum=2)]

    @classmethod
    def variant(cls, params: dict[str, Any]) -> VariantSpec:
        return variant('comppthin')

    @classmethod
    def build_graph(cls, params: dict[str, Any]) -> Graph:
        return complement(matching_nk2(params['n']))

    @classmethod
    def build_layout(cls, params: dict[str, Any]) -> Layout:
        return cocktail_party_layout(params['n'])

    @classmethod
    def expected_width(cls, params: dict[str, Any]) -> int:
        return params['n']


class CrownComplementConstructor(LayoutConstructor):
    constructor_id = "crown-complement"
    constructor_name = "Crown complement"
    constructor_description = "Complement of CR_n, complete proper layout with 2 classes"

    @classmethod
    def get_parameter_fields(cls) -> list[ParameterField]:
        return [ParameterField(name='n', label='n', minimum=2, help_text='Vertices per side')]

    @classmethod
    def variant(cls, params: dict[str, Any]) -> VariantSpec:
        return variant('comppthin')

    @classmethod
    def build_graph(cls, params: dict[str, Any]) -> Graph:
        return complement(crown(params['n'])[0])

    @classmethod
    def build_layout(cls, params: dict[str, Any]) -> Layout:
        return crown_complement_layout(params['n'])

    @classmethod
    def expected_width(cls, params: dict[str, Any]) -> int:
        return 2
