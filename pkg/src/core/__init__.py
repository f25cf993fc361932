from .config import ConfigManager, ThinnessConfig

__all__ = ['ConfigManager', 'ThinnessConfig']
