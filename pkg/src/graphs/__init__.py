from .graph import Graph
from .layout import Layout, VariantSpec, Verdict, variant, verify

__all__ = ['Graph', 'Layout', 'VariantSpec', 'Verdict', 'variant', 'verify']
