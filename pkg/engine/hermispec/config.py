"""
Runtime configuration for the Hermitian spectral engine.

Values come from the environment (optionally a ``.env`` file) with sensible
defaults; explicit constructor or CLI arguments always win over both.
"""

import os

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

PACKAGE_DIR = os.path.dirname(os.path.abspath(__file__))
SCHEMA_DIR = os.path.join(PACKAGE_DIR, "schemas")
DATA_DIR = os.path.join(PACKAGE_DIR, "data")

DEFAULT_REGISTRY_PATH = os.path.join(DATA_DIR, "admissible_registry.json")
CAMPAIGN_DEFINITIONS_PATH = os.path.join(DATA_DIR, "out_campaigns.yaml")

DEFAULT_TOLERANCE = 1e-11
DEFAULT_FREE_MAX_ORDER = 10
DEFAULT_GUIDED_MAX_ORDER = 30


def _int_from_env(name, default):
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"Environment variable {name} must be an integer, got {raw!r}")
    if value <= 0:
        raise ValueError(f"Environment variable {name} must be positive, got {value}")
    return value


def get_thread_count(override=None):
    """
    Get the number of worker processes used for batched char-poly work.

    Args:
        override: Explicit value taking precedence over HERMISPEC_THREADS

    Returns:
        int: Worker count, 1 meaning serial execution
    """
    if override is not None:
        return max(1, int(override))
    return _int_from_env("HERMISPEC_THREADS", 1)


def get_registry_path(override=None):
    """Path of the admissible-graph registry file."""
    return override or os.getenv("HERMISPEC_REGISTRY", DEFAULT_REGISTRY_PATH)


def get_max_order(mode="free", override=None):
    """
    Get the order guard for a search mode.

    Args:
        mode: "free" or "guided"
        override: Explicit cap taking precedence over the environment

    Returns:
        int: Largest target order the search will accept
    """
    if override is not None:
        return int(override)
    if mode == "guided":
        return _int_from_env("HERMISPEC_GUIDED_MAX_ORDER", DEFAULT_GUIDED_MAX_ORDER)
    return _int_from_env("HERMISPEC_MAX_ORDER", DEFAULT_FREE_MAX_ORDER)


def get_tolerance(override=None):
    """Floating tolerance for eigenvalue work (HERMISPEC_TOL)."""
    if override is not None:
        return float(override)
    raw = os.getenv("HERMISPEC_TOL")
    if raw is None or raw.strip() == "":
        return DEFAULT_TOLERANCE
    try:
        value = float(raw)
    except ValueError:
        raise ValueError(f"Environment variable HERMISPEC_TOL must be a float, got {raw!r}")
    if value <= 0:
        raise ValueError(f"Environment variable HERMISPEC_TOL must be positive, got {value}")
    return value
