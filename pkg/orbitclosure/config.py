"""
Configuration module for orbitclosure
"""
import json
import os
from pathlib import Path
from typing import Any, List, Optional

from dotenv import load_dotenv

DEFAULT_MAX_EXPONENT = 4
DEFAULT_SAMPLES = "-2,-1,1,2,3"
DEFAULT_LENGTH_CAP = 32
DEFAULT_JOBS = 1
DEFAULT_FORMAT = "text"


def split_samples(value: Any) -> List[str]:
    """Comma separated text, or a list, as stripped rational strings."""
    if isinstance(value, (list, tuple)):
        items = [str(item) for item in value]
    else:
        items = str(value).split(",")
    return [item.strip() for item in items if item.strip()]


class Config:
    """Configuration manager for orbitclosure"""

    def __init__(self, config_file: Optional[Path] = None):
        load_dotenv()
        self.config_file = config_file or self._get_default_config_path()
        self.config = self._load_config()

        # Enumeration settings
        self.max_exponent = int(
            self.get(
                "max_exponent",
                os.environ.get("ORBITCLOSURE_MAX_EXPONENT", DEFAULT_MAX_EXPONENT),
            )
        )
        self.samples = self._as_csv(
            self.get("samples", os.environ.get("ORBITCLOSURE_SAMPLES", DEFAULT_SAMPLES))
        )
        self.length_cap = int(
            self.get(
                "length_cap",
                os.environ.get("ORBITCLOSURE_LENGTH_CAP", DEFAULT_LENGTH_CAP),
            )
        )
        self.jobs = int(
            self.get("jobs", os.environ.get("ORBITCLOSURE_JOBS", DEFAULT_JOBS))
        )

        # Output
        self.output_format = self.get(
            "format", os.environ.get("ORBITCLOSURE_FORMAT", DEFAULT_FORMAT)
        )

    def _get_default_config_path(self) -> Path:
        """Get the default configuration file path"""
        config_locations = [
            Path.cwd() / ".orbitclosure.json",
            Path.home() / ".orbitclosure.json",
        ]

        for location in config_locations:
            if location.exists():
                return location

        return Path.home() / ".orbitclosure.json"

    def _load_config(self) -> dict:
        """Load configuration from file"""
        if self.config_file.exists():
            try:
                with open(self.config_file, "r") as f:
                    return json.load(f)
            except (OSError, json.JSONDecodeError):
                pass

        return {}

    @staticmethod
    def _as_csv(value: Any) -> str:
        if isinstance(value, (list, tuple)):
            return ",".join(str(item) for item in value)
        return str(value)

    def sample_list(self) -> List[str]:
        """Coefficient samples as individual rational strings."""
        return split_samples(self.samples)

    def get(self, key: str, default: Any = None) -> Any:
        """Get a configuration value"""
        return self.config.get(key, default)

    def save(self, key: str, value: Any) -> None:
        """Save a configuration value to ~/.orbitclosure.json"""
        config_path = Path.home() / ".orbitclosure.json"
        data = {}
        if config_path.exists():
            try:
                with open(config_path, "r") as f:
                    data = json.load(f)
            except (OSError, json.JSONDecodeError):
                pass
        data[key] = value
        with open(config_path, "w") as f:
            json.dump(data, f, indent=2)
        self.config[key] = value
