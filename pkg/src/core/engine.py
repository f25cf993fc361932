"""Engine that holds the constructor registry and runs checks and searches."""
import logging
from typing import Any, Optional, Type

from .config import ConfigManager
from .errors import ConstructionError, ThinnessError
from ..constructors.base import LayoutConstructor
from ..graphs.exact import ExactResult, exact_value
from ..graphs.graph import Graph
from ..graphs.layout import Layout, VariantSpec, Verdict, verify

logger = logging.getLogger(__name__)


class ThinnessEngine:
    """Registry of witness constructors plus verification and exact search."""

    def __init__(self, config: ConfigManager):
        self.config = config
        self._constructor_registry: dict[str, Type[LayoutConstructor]] = {}

    def register_constructor(self, constructor_class: Type[LayoutConstructor]):
        """Register a witness constructor type."""
        self._constructor_registry[constructor_class.constructor_id] = constructor_class
        logger.info(f"Registered constructor: {constructor_class.constructor_name}")

    def get_registered_constructors(self) -> list[dict[str, Any]]:
        """Get list of all registered constructors with their parameter fields."""
        constructors = []
        for constructor_class in self._constructor_registry.values():
            constructors.append({
                'id': constructor_class.constructor_id,
                'name': constructor_class.constructor_name,
                'description': constructor_class.constructor_description,
                'parameter_fields': [f.to_dict() for f in constructor_class.get_parameter_fields()],
            })
        return constructors

    def get_constructor(self, constructor_id: str) -> Type[LayoutConstructor]:
        try:
            return self._constructor_registry[constructor_id]
        except KeyError:
            raise ThinnessError(f"Unknown constructor: {constructor_id}") from None

    def construct(self, constructor_id: str, params: dict[str, Any]) -> tuple[Graph, Layout, VariantSpec]:
        """Build a graph and its witness layout, and check the layout before returning it."""
        constructor_class = self.get_constructor(constructor_id)
        valid, message = constructor_class.validate_parameters(params)
        if not valid:
            raise ThinnessError(message)
        params = constructor_class.resolve(params)

        spec = constructor_class.variant(params)
        graph = constructor_class.build_graph(params)
        layout = constructor_class.build_layout(params)

        verdict = self.verify(graph, layout, spec)
        if not verdict:
            raise ConstructionError(f"{constructor_id} produced an invalid {spec} layout: {verdict.detail}")
        expected = constructor_class.expected_width(params)
        if expected is not None and layout.width != expected:
            raise ConstructionError(
                f"{constructor_id} produced {layout.width} classes, expected {expected}"
            )
        logger.info(f"Constructed {spec} layout with {layout.width} classes on {graph.n} vertices")
        return graph, layout, spec

    def verify(self, graph: Graph, layout: Layout, spec: VariantSpec) -> Verdict:
        return verify(graph, layout, spec)

    def run_exact(
        self,
        graph: Graph,
        spec: VariantSpec,
        jobs: Optional[int] = None,
        budget_ms: Optional[int] = None,
    ) -> ExactResult:
        """Exact search; ``jobs`` and ``budget_ms`` default to the configured values."""
        settings = self.config.settings
        return exact_value(
            graph,
            spec,
            budget_ms=budget_ms if budget_ms is not None else settings.budget_ms,
            jobs=jobs if jobs is not None else settings.jobs,
        )
