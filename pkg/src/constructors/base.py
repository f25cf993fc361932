"""Base class for witness-layout constructors."""
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

from ..graphs.graph import Graph
from ..graphs.layout import VARIANTS, Layout, VariantSpec


class FieldType(str, Enum):
    """Types of constructor parameters."""
    INTEGER = "integer"
    TEXT = "text"
    SELECT = "select"


@dataclass
class ParameterField:
    """Definition of a constructor parameter."""
    name: str
    label: str
    field_type: FieldType = FieldType.INTEGER
    required: bool = True
    default: Any = None
    minimum: Optional[int] = None
    help_text: str = ""
    options: list[str] = field(default_factory=list)  # For SELECT type

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON serialization."""
        return {
            'name': self.name,
            'label': self.label,
            'type': self.field_type.value,
            'required': self.required,
            'default': self.default,
            'minimum': self.minimum,
            'help_text': self.help_text,
            'options': self.options,
        }


def variant_field(default: Optional[str] = None, choices: Optional[list[str]] = None) -> ParameterField:
    return ParameterField(
        name='variant',
        label='Variant',
        field_type=FieldType.SELECT,
        required=default is None,
        default=default,
        help_text='Thinness variant the layout certifies',
        options=choices or list(VARIANTS),
    )


class LayoutConstructor(ABC):
    """Builds a graph family member together with a layout certifying a variant."""

    # Constructor metadata - override in subclasses
    constructor_id: str = "base"
    constructor_name: str = "Base Constructor"
    constructor_description: str = "Base witness constructor"

    @classmethod
    @abstractmethod
    def get_parameter_fields(cls) -> list[ParameterField]:
        """Return the parameters this constructor accepts."""
        pass

    @classmethod
    def validate_parameters(cls, params: dict[str, Any]) -> tuple[bool, Optional[str]]:
        """
        Validate the provided parameters.

        Returns:
            Tuple of (is_valid, error_message)
        """
        for param in cls.get_parameter_fields():
            value = params.get(param.name, param.default)
            if value is None:
                if param.required:
                    return False, f"Missing required parameter: {param.label}"
                continue
            if param.field_type is FieldType.INTEGER:
                if not isinstance(value, int) or isinstance(value, bool):
                    return False, f"Parameter '{param.label}' must be an integer"
                if param.minimum is not None and value < param.minimum:
                    return False, f"Parameter '{param.label}' must be at least {param.minimum}"
            elif param.field_type is FieldType.TEXT and not isinstance(value, str):
                return False, f"Parameter '{param.label}' must be text"
            elif param.field_type is FieldType.SELECT and value not in param.options:
                return False, f"Parameter '{param.label}' must be one of: {', '.join(param.options)}"
        return True, None

    @classmethod
    def resolve(cls, params: dict[str, Any]) -> dict[str, Any]:
        """Fill in defaults for missing optional parameters."""
        resolved = dict(params)
        for param in cls.get_parameter_fields():
            resolved.setdefault(param.name, param.default)
        return resolved

    @classmethod
    @abstractmethod
    def variant(cls, params: dict[str, Any]) -> VariantSpec:
        """The variant the built layout certifies."""
        pass

    @classmethod
    @abstractmethod
    def build_graph(cls, params: dict[str, Any]) -> Graph:
        pass

    @classmethod
    @abstractmethod
    def build_layout(cls, params: dict[str, Any]) -> Layout:
        pass

    @classmethod
    def expected_width(cls, params: dict[str, Any]) -> Optional[int]:
        """Class count the construction promises, if known in closed form."""
        return None
