"""Configuration management for intensity-distortion."""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import TYPE_CHECKING, Any

import tomli
import tomli_w
from platformdirs import user_config_dir

from intensity_distortion.core.profile import ElicitationMode
from intensity_distortion.core.rational import parse_rational

if TYPE_CHECKING:
    from intensity_distortion.distortion.poii import EnumerationBudget

logger = logging.getLogger(__name__)

APP_NAME = "intensity-distortion"

_INT_KEYS = (
    "decimal_digits",
    "poii_max_alternatives",
    "poii_max_agents",
    "poii_max_assignments",
    "conjecture_total",
)


@dataclass
class Config:
    """Defaults used by the command-line front end."""

    alpha: str = "1/2"
    mode: str = ElicitationMode.MANDATORY.value
    decimal_digits: int = 0
    poii_max_alternatives: int = 6
    poii_max_agents: int = 4
    poii_max_assignments: int = 4096
    conjecture_total: int = 100
    output_dir: str = "."

    def to_dict(self) -> dict[str, Any]:
        """Convert Config to dictionary for TOML serialization."""
        return {
            "alpha": self.alpha,
            "mode": self.mode,
            "decimal_digits": self.decimal_digits,
            "poii_max_alternatives": self.poii_max_alternatives,
            "poii_max_agents": self.poii_max_agents,
            "poii_max_assignments": self.poii_max_assignments,
            "conjecture_total": self.conjecture_total,
            "output_dir": self.output_dir,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Config":
        """Create Config from dictionary loaded from TOML."""
        defaults = cls()
        return cls(**{key: data.get(key, value) for key, value in defaults.to_dict().items()})

    def budget(self) -> "EnumerationBudget":
        """PoII enumeration budget built from the `poii_*` fields."""
        from intensity_distortion.distortion.poii import EnumerationBudget

        return EnumerationBudget(
            max_alternatives=self.poii_max_alternatives,
            max_agents=self.poii_max_agents,
            max_assignments=self.poii_max_assignments,
        )


def get_config_dir() -> Path:
    """Get the configuration directory path."""
    return Path(user_config_dir(APP_NAME))


def get_config_file_path() -> Path:
    """Get the full path to the configuration file."""
    return get_config_dir() / "config.toml"


def ensure_config_exists() -> Config:
    """Ensure configuration file exists and load it."""
    config_path = get_config_file_path()
    config_dir = config_path.parent

    if not config_dir.exists():
        logger.info(f"Creating configuration directory: {config_dir}")
        try:
            config_dir.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            logger.error(f"Failed to create config directory {config_dir}: {e}")
            raise PermissionError(f"Cannot create config directory: {config_dir}") from e

    if not config_path.exists():
        logger.info(f"Creating default configuration file: {config_path}")
        default_config = Config()
        _save_config_to_file(config_path, default_config)
        return default_config

    logger.debug(f"Loading configuration from: {config_path}")
    return load_config()


def load_config() -> Config:
    """Load configuration from the TOML file."""
    config_path = get_config_file_path()

    if not config_path.exists():
        raise FileNotFoundError(f"Configuration file not found: {config_path}")

    try:
        with open(config_path, "rb") as file:
            toml_data = tomli.load(file)
    except tomli.TOMLDecodeError as e:
        logger.error(f"Invalid TOML in config file {config_path}: {e}")
        raise ValueError(f"Invalid configuration file {config_path}: {e}") from e
    except OSError as e:
        logger.error(f"Error reading config file {config_path}: {e}")
        raise

    logger.debug(f"Successfully loaded config from {config_path}")
    return Config.from_dict(toml_data)


def update_config_value(key: str, value: Any) -> Config:
    """Validate and store a single configuration value."""
    config = ensure_config_exists()

    if key == "alpha":
        alpha = parse_rational(str(value))
        if not 0 <= alpha <= 1:
            raise ValueError(f"alpha must lie in [0, 1], got {value}")
        config.alpha = str(value).strip()
    elif key == "mode":
        try:
            config.mode = ElicitationMode(str(value).lower()).value
        except ValueError as e:
            raise ValueError(f"mode must be 'mandatory' or 'voluntary', got {value!r}") from e
    elif key in _INT_KEYS:
        try:
            number = int(value)
        except (TypeError, ValueError) as e:
            raise ValueError(f"{key} must be an integer, got {value!r}") from e
        minimum = 0 if key == "decimal_digits" else 1
        if number < minimum:
            raise ValueError(f"{key} must be at least {minimum}, got {number}")
        setattr(config, key, number)
    elif key == "output_dir":
        if not isinstance(value, str | Path):
            raise ValueError("output_dir must be a string or Path")
        config.output_dir = str(value)
    else:
        raise ValueError(f"Unknown configuration key: {key}")

    save_config(config)
    logger.info(f"Updated configuration: {key} = {value}")
    return config


def save_config(config: Config) -> None:
    """Save configuration to the TOML file."""
    _save_config_to_file(get_config_file_path(), config)


def _save_config_to_file(config_path: Path, config: Config) -> None:
    """Internal function to save config to a specific file path."""
    try:
        with open(config_path, "wb") as file:
            tomli_w.dump(config.to_dict(), file)
        logger.debug(f"Configuration saved to {config_path}")
    except OSError as e:
        logger.error(f"Failed to save config to {config_path}: {e}")
        raise PermissionError(f"Cannot write to config file: {config_path}") from e
