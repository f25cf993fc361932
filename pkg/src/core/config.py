"""Configuration manager for Thinness Lab."""
import json
import logging
import os
from pathlib import Path
from typing import Any, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)

HOME_ENV = 'THINNESS_LAB_HOME'


class ThinnessConfig(BaseModel):
    """Main configuration model."""
    jobs: int = Field(default=1, ge=1)  # exact-search worker processes
    budget_ms: Optional[int] = Field(default=None, ge=1)  # None = unlimited
    log_level: str = "INFO"
    log_to_file: bool = False
    seed: Optional[int] = None  # default seed for random generators


def default_config_dir() -> Path:
    """Config directory from THINNESS_LAB_HOME, else the per-user app data directory."""
    load_dotenv()
    home = os.environ.get(HOME_ENV)
    if home:
        return Path(home)
    if os.name == 'nt':  # Windows
        return Path(os.environ.get('APPDATA', '')) / 'ThinnessLab'
    return Path.home() / '.thinness-lab'


class ConfigManager:
    """Loads and persists ``config.json``."""

    def __init__(self, config_dir: Optional[Path] = None):
        self.config_dir = Path(config_dir) if config_dir is not None else default_config_dir()
        self.config_dir.mkdir(parents=True, exist_ok=True)
        self.config_file = self.config_dir / 'config.json'
        self._config = ThinnessConfig()
        self._load_config()

    def _load_config(self):
        """Load configuration from file."""
        if not self.config_file.exists():
            return
        try:
            data = json.loads(self.config_file.read_text())
            self._config = ThinnessConfig(**data)
        except Exception as e:
            logger.error(f"Error loading config: {e}")
            self._config = ThinnessConfig()

    def _save_config(self):
        """Save configuration to file."""
        self.config_file.write_text(json.dumps(self._config.model_dump(), indent=2))

    @property
    def settings(self) -> ThinnessConfig:
        return self._config

    @settings.setter
    def settings(self, config: ThinnessConfig):
        self._config = config
        self._save_config()

    def update(self, **fields: Any) -> ThinnessConfig:
        """Validate and persist changed fields."""
        self.settings = ThinnessConfig(**{**self._config.model_dump(), **fields})
        return self._config

    @property
    def log_dir(self) -> Path:
        return self.config_dir / 'logs'
