"""
Helpers shared by the command line scripts: environment setup and resolution of the physical system
named in the configuration.
"""

import logging
import os

from dotenv import load_dotenv
from omegaconf import DictConfig

from dipising.data.catalog import (
    PhysicalSystem,
    builtin_catalog,
    find_system,
    inline_system,
    load_catalog,
)
from dipising.errors import BadRangeError, UnknownSystemError

log = logging.getLogger(__name__)

INLINE_KEYS = ("gamma_down", "gamma_up", "J", "n")


def setup_environment():
    load_dotenv()
    os.environ["HYDRA_FULL_ERROR"] = "1"


def load_systems(catalog: str | None) -> list[PhysicalSystem]:
    if catalog:
        return load_catalog(catalog)
    return builtin_catalog()


def resolve_system(cfg: DictConfig) -> PhysicalSystem:
    """
    Inline parameters win over a catalog name when any of them is set.
    """
    inline = cfg.get("inline") or {}
    given = {key: inline.get(key) for key in INLINE_KEYS if inline.get(key) is not None}
    if given:
        missing = [key for key in INLINE_KEYS if key not in given]
        if missing:
            raise BadRangeError(f"inline system needs all of {list(INLINE_KEYS)}, missing {missing}")
        return inline_system(**given)
    if not cfg.get("system"):
        raise UnknownSystemError("no system given: set system=<name> or inline.gamma_down/gamma_up/J/n")
    return find_system(load_systems(cfg.get("catalog")), cfg.system)


def require_positive(name: str, value) -> float:
    if value is None:
        raise BadRangeError(f"{name} must be set")
    try:
        number = float(value)
    except (TypeError, ValueError) as e:
        raise BadRangeError(f"{name} must be a number, got {value!r}") from e
    if not number > 0:
        raise BadRangeError(f"{name} must be positive, got {value}")
    return number
