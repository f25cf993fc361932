from .base import LayoutConstructor, ParameterField

__all__ = ['LayoutConstructor', 'ParameterField']
