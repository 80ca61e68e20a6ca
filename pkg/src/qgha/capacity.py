"""Configurable capacity bounds.

Degrees multiply under repeated substitution of f, so unguarded inputs can
exhaust memory; exhaustive prime-field searches are likewise only viable for
small p.  Both bounds can be overridden at once through the QGHA_CAPACITY
environment variable.
"""

import os

from .errors import CapacityExceeded

DEFAULT_DEGREE_CAP = 10**6
DEFAULT_SEARCH_CAP = 10**4

_ENV_VAR = "QGHA_CAPACITY"


def _env_override() -> "int | None":
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        return None
    return value if value > 0 else None


def degree_cap() -> int:
    """Largest polynomial degree any operation may produce."""
    return _env_override() or DEFAULT_DEGREE_CAP


def search_cap() -> int:
    """Largest exhaustive search space (prime-field size, expansions, ...)."""
    return _env_override() or DEFAULT_SEARCH_CAP


def check_degree(degree: int) -> None:
    cap = degree_cap()
    if degree > cap:
        raise CapacityExceeded(f"degree {degree} exceeds capacity bound {cap}")


def check_search(size: int, what: str = "search space") -> None:
    cap = search_cap()
    if size > cap:
        raise CapacityExceeded(f"{what} of size {size} exceeds capacity bound {cap}")
