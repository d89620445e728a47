import logging
import os
from configparser import ConfigParser

from core.errors import ConfigurationError

here = os.path.dirname(os.path.abspath(__file__))

config = ConfigParser()
config.read_dict({
    "guards": {
        "factorial_guard": "8",
        "census_cells": "16",
        "shatter_dimension": "20",
        "zero_set_cells": "4096",
        "polynomial_degree": "64",
        "polynomial_terms": "4096",
    },
    "census": {
        "example_limit": "32",
        "cross_check": "true",
    },
    "logging": {
        "level": "WARNING",
        "format": "%(asctime)s %(levelname)s %(name)s: %(message)s",
    },
    "api": {
        "host": "127.0.0.1",
        "port": "5000",
        "cors_origins": "http://localhost:3000",
    },
    "dependencies": {
        "file": "dependencies.yaml",
    },
})
config.read(os.path.join(here, "config.ini"))

GUARD_ENV_VAR = "EXTREMAL_GUARD"


def _guard_override(position: int) -> int | None:
    raw = os.environ.get(GUARD_ENV_VAR)
    if not raw:
        return None
    parts = [p.strip() for p in raw.split(",")]
    if len(parts) > 2 or not all(p.isdigit() for p in parts):
        raise ConfigurationError(f"{GUARD_ENV_VAR} must be 'N' or 'N,M' with positive integers, got '{raw}'")
    if position < len(parts):
        return int(parts[position])
    return None


def factorial_guard() -> int:
    override = _guard_override(0)
    return override if override is not None else config.getint("guards", "factorial_guard")


def census_cell_guard() -> int:
    override = _guard_override(1)
    return override if override is not None else config.getint("guards", "census_cells")


def shatter_dimension_guard() -> int:
    return config.getint("guards", "shatter_dimension")


def zero_set_cell_guard() -> int:
    return config.getint("guards", "zero_set_cells")


def polynomial_degree_guard() -> int:
    return config.getint("guards", "polynomial_degree")


def polynomial_term_guard() -> int:
    return config.getint("guards", "polynomial_terms")


def configure_logging(verbose: bool = False):
    level = logging.DEBUG if verbose else config.get("logging", "level").upper()
    logging.basicConfig(level=level, format=config.get("logging", "format", raw=True))
