"""
config.py

Run configuration: defaults, optional JSON file, environment overrides.
"""

from typing import Any, Dict, Optional
import copy
import json
import logging
import os

from .errors import ArgumentError
from .numerics import MIN_PRECISION, parse_rational

logger = logging.getLogger(__name__)

DEFAULTS: Dict[str, Any] = {
    'numerics': {'precision': 60, 'seed': 20240601},
    'oracle': {'max_n': 12, 'x_values': ["1/3", "1/2", "1", "2", "7/5"]},
    'output': {'format': 'csv'},
    'qkz': {'samples': 200},
    'characters': {'max_n': 20, 'random_points': 50},
    'asymptotics': {
        'compare_n': [72, 73],
        'tolerance': 5e-3,
        'interior_min': 8,
        'tau_n_max': 200,
        'ode_n_max': 20,
    },
    'logging': {'level': 'WARNING'},
}

# (dot key, environment variable, converter)
ENV_OVERRIDES = [
    ('numerics.precision', 'XXZ_PRECISION', int),
    ('numerics.seed', 'XXZ_SEED', int),
    ('oracle.max_n', 'XXZ_MAX_N', int),
    ('output.format', 'XXZ_FORMAT', str),
    ('qkz.samples', 'XXZ_QKZ_SAMPLES', int),
    ('asymptotics.tolerance', 'XXZ_TOLERANCE', float),
    ('logging.level', 'XXZ_LOG_LEVEL', str),
]


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(base.get(key), dict):
            _merge(base[key], value)
        else:
            base[key] = value
    return base


class RunConfig:
    """
    Configuration for library runs, suites and the command line.
    Values come from the built-in defaults, then a JSON file, then the
    environment; command-line flags are applied last with ``set``.
    """

    def __init__(self, config_file: Optional[str] = None):
        """
        Initialize run configuration.

        Args:
            config_file: Optional path to a JSON configuration file
        """
        self.config_file = config_file
        self.config = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        """
        Load configuration from defaults, file and environment.

        Returns:
            Configuration dictionary
        """
        config = copy.deepcopy(DEFAULTS)

        if self.config_file:
            if not os.path.exists(self.config_file):
                raise ArgumentError(f"configuration file not found: {self.config_file}")
            try:
                with open(self.config_file, 'r', encoding='utf-8') as f:
                    _merge(config, json.load(f))
            except json.JSONDecodeError as e:
                raise ArgumentError(f"invalid configuration file {self.config_file}: {e}")

        for key, env, convert in ENV_OVERRIDES:
            raw = os.environ.get(env)
            if raw is None:
                continue
            try:
                value = convert(raw)
            except ValueError:
                raise ArgumentError(f"invalid value for {env}: {raw!r}")
            self._assign(config, key, value)
            logger.debug("%s overridden from %s", key, env)

        return config

    @staticmethod
    def _assign(config: Dict[str, Any], key: str, value: Any) -> None:
        keys = key.split('.')
        node = config
        for k in keys[:-1]:
            node = node.setdefault(k, {})
        node[keys[-1]] = value

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get a configuration value.

        Args:
            key: Configuration key (dot notation, e.g. 'numerics.precision')
            default: Default value if key not found

        Returns:
            Configuration value
        """
        value: Any = self.config
        for k in key.split('.'):
            if not isinstance(value, dict):
                return default
            value = value.get(k)
            if value is None:
                return default
        return value

    def set(self, key: str, value: Any) -> None:
        """Set a configuration value (dot notation)."""
        self._assign(self.config, key, value)

    def validate(self) -> None:
        """
        Check value ranges.

        Raises:
            ArgumentError: On the first invalid value
        """
        if self.get('numerics.precision') < MIN_PRECISION:
            raise ArgumentError(f"numerics.precision must be >= {MIN_PRECISION}")
        if self.get('output.format') not in ('csv', 'json'):
            raise ArgumentError("output.format must be 'csv' or 'json'")
        if self.get('oracle.max_n') < 0:
            raise ArgumentError("oracle.max_n must be non-negative")
        for text in self.get('oracle.x_values', []):
            if parse_rational(text) <= 0:
                raise ArgumentError(f"oracle.x_values entry {text} is not positive")
        if self.get('asymptotics.tolerance') <= 0:
            raise ArgumentError("asymptotics.tolerance must be positive")
        level = str(self.get('logging.level', 'WARNING')).upper()
        if level not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
            raise ArgumentError(f"unknown logging level {level}")
