"""Configuration management for braided-homology."""

import json
import os
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv

from ..core.errors import ParseError

DEFAULTS: Dict[str, Any] = {
    "complexes": {"max_degree": 4},
    "enumeration": {
        "budget": 5_000_000,
        "extended_budget": 500_000_000,
        "workers": 1,
    },
    "extensions": {
        "gamma_search_limit": 4096,
        "cochain_budget": 2**20,
    },
    "canonical": {"max_size": 8},
    "logging": {"level": "WARNING", "format": "console"},
}


def _lookup(tree: Dict[str, Any], key: str) -> Any:
    value: Any = tree
    for k in key.split("."):
        if not isinstance(value, dict):
            return None
        value = value.get(k)
        if value is None:
            return None
    return value


def _decode_env(env_value: str) -> Any:
    try:
        return json.loads(env_value)
    except (json.JSONDecodeError, ValueError):
        if env_value.lower() == "true":
            return True
        if env_value.lower() == "false":
            return False
        try:
            return int(env_value)
        except ValueError:
            try:
                return float(env_value)
            except ValueError:
                return env_value


class Config:
    """Configuration manager with support for files and environment variables."""

    ENV_PREFIX = "BRAIDED_HOMOLOGY_"

    def __init__(
        self,
        config_path: Optional[Path] = None,
        env_path: Optional[Path] = None,
    ):
        """Initialize Config.

        Args:
            config_path: Path to config.json file. If None, uses default.
            env_path: Path to .env file. If None, uses default.
        """
        if env_path:
            load_dotenv(env_path)
        else:
            default_env = Path("config/.env")
            if default_env.exists():
                load_dotenv(default_env)
            else:
                load_dotenv()

        self.config_path = config_path or Path("config/config.json")
        self._config: Dict[str, Any] = {}
        self._load_config()

    def _load_config(self) -> None:
        """Load configuration from file.

        Raises:
            ParseError: If the file exists but is not a JSON object
        """
        if not self.config_path.exists():
            self._config = {}
            return
        try:
            with open(self.config_path, "r") as f:
                data = json.load(f)
        except json.JSONDecodeError as exc:
            raise ParseError(
                f"config file {self.config_path} is not valid JSON: {exc.msg}",
                witness={"path": str(self.config_path), "line": exc.lineno},
            ) from exc
        except OSError as exc:
            raise ParseError(
                f"cannot read config file {self.config_path}", witness={"path": str(self.config_path)}
            ) from exc
        if not isinstance(data, dict):
            raise ParseError(
                f"config file {self.config_path} must hold a JSON object",
                witness={"path": str(self.config_path)},
            )
        self._config = data

    def get(self, key: str, default: Any = None) -> Any:
        """Get configuration value.

        Supports dot-notation for nested keys (e.g., "complexes.max_degree").
        Environment variables named BRAIDED_HOMOLOGY_<KEY> (uppercase, dots
        replaced with underscores) take precedence over the file; built-in
        defaults apply last.

        Args:
            key: Configuration key (supports dot-notation)
            default: Default value if key not found anywhere

        Returns:
            Configuration value or default
        """
        env_key = self.ENV_PREFIX + key.replace(".", "_").upper()
        env_value = os.getenv(env_key)
        if env_value is not None:
            return _decode_env(env_value)

        value = _lookup(self._config, key)
        if value is not None:
            return value

        builtin = _lookup(DEFAULTS, key)
        return builtin if builtin is not None else default

    def set(self, key: str, value: Any) -> None:
        """Set configuration value and persist it.

        Args:
            key: Configuration key (supports dot-notation)
            value: Value to set
        """
        keys = key.split(".")
        config = self._config

        for k in keys[:-1]:
            if k not in config:
                config[k] = {}
            config = config[k]

        config[keys[-1]] = value
        self._save_config()

    def _save_config(self) -> None:
        """Save configuration to file."""
        self.config_path.parent.mkdir(parents=True, exist_ok=True)

        with open(self.config_path, "w") as f:
            json.dump(self._config, f, indent=2)

    def get_all(self) -> Dict[str, Any]:
        """Get all file configuration.

        Returns:
            Dictionary of all configuration values
        """
        return self._config.copy()

    def reload(self) -> None:
        """Reload configuration from file."""
        self._load_config()


_default_config: Optional[Config] = None


def get_config() -> Config:
    """Return the process-wide Config, creating it on first use."""
    global _default_config
    if _default_config is None:
        _default_config = Config()
    return _default_config


def set_config(config: Config) -> None:
    """Replace the process-wide Config (used by the CLI and tests)."""
    global _default_config
    _default_config = config


def setting(value: Optional[Any], key: str) -> Any:
    """Return an explicit argument if given, else the configured value."""
    return value if value is not None else get_config().get(key)
