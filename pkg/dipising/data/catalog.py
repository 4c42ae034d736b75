"""
Catalog of physical qubit carriers and its JSON codec.

A catalog file is a JSON array of objects with keys name, two_j_down, two_j_up, gamma_down,
gamma_up, optional coherence_time_s and note.
"""

import json
import logging
import math
from dataclasses import dataclass
from pathlib import Path

from dipising.errors import BadRangeError, CatalogError, UnknownSystemError
from dipising.physics.angmom import AngularMomentumLabel
from dipising.physics.constants import HBAR, MU_B
from dipising.physics.dipolar import QubitChoice, directed_qubit

log = logging.getLogger(__name__)

REQUIRED_KEYS = ("name", "two_j_down", "two_j_up", "gamma_down", "gamma_up")


@dataclass(frozen=True)
class PhysicalSystem:
    """
    Qubit carrier with |down> = |J, J> and |up> = |J+n, J+n>.

    Args:
        name (str): Catalog key
        two_j_down (int): 2J of the |down> multiplet
        two_j_up (int): 2(J+n) of the |up> multiplet
        gamma_down (float): Gyromagnetic ratio of the |down> multiplet, rad/(s T)
        gamma_up (float): Gyromagnetic ratio of the |up> multiplet, rad/(s T)
        coherence_time (float, optional): Reference coherence or lifetime in seconds
        note (str): Provenance of the numbers
    """

    name: str
    two_j_down: int
    two_j_up: int
    gamma_down: float
    gamma_up: float
    coherence_time: float | None = None
    note: str = ""

    def __post_init__(self):
        for key in ("two_j_down", "two_j_up"):
            value = getattr(self, key)
            if isinstance(value, bool) or int(value) != value or value < 0:
                raise CatalogError(f"{self.name}: {key} must be a non-negative integer, got {value!r}")
            object.__setattr__(self, key, int(value))
        if (self.two_j_up - self.two_j_down) % 2:
            raise CatalogError(f"{self.name}: J and J+n must differ by an integer")
        for key in ("gamma_down", "gamma_up"):
            value = float(getattr(self, key))
            if not math.isfinite(value):
                raise CatalogError(f"{self.name}: {key} must be finite, got {value}")
            object.__setattr__(self, key, value)
        if self.coherence_time is not None:
            coherence_time = float(self.coherence_time)
            if not (math.isfinite(coherence_time) and coherence_time > 0):
                raise CatalogError(f"{self.name}: coherence time must be positive, got {coherence_time}")
            object.__setattr__(self, "coherence_time", coherence_time)

    @property
    def j_down(self) -> float:
        return self.two_j_down / 2

    @property
    def j_up(self) -> float:
        return self.two_j_up / 2

    @property
    def n(self) -> int:
        return (self.two_j_up - self.two_j_down) // 2

    @property
    def coupling_difference(self) -> float:
        return self.gamma_up * self.j_up - self.gamma_down * self.j_down

    def qubit_choice(self) -> QubitChoice:
        return directed_qubit(self.two_j_down, self.gamma_down, self.two_j_up, self.gamma_up)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "two_j_down": self.two_j_down,
            "two_j_up": self.two_j_up,
            "gamma_down": self.gamma_down,
            "gamma_up": self.gamma_up,
            "coherence_time_s": self.coherence_time,
            "note": self.note,
        }

    @classmethod
    def from_dict(cls, entry: dict) -> "PhysicalSystem":
        if not isinstance(entry, dict):
            raise CatalogError(f"catalog entries must be objects, got {type(entry).__name__}")
        missing = [key for key in REQUIRED_KEYS if key not in entry]
        if missing:
            raise CatalogError(f"catalog entry {entry.get('name', '?')!r} misses keys {missing}")
        try:
            return cls(
                name=str(entry["name"]),
                two_j_down=entry["two_j_down"],
                two_j_up=entry["two_j_up"],
                gamma_down=entry["gamma_down"],
                gamma_up=entry["gamma_up"],
                coherence_time=entry.get("coherence_time_s"),
                note=str(entry.get("note") or ""),
            )
        except CatalogError:
            raise
        except (TypeError, ValueError) as e:
            raise CatalogError(f"catalog entry {entry.get('name', '?')!r}: {e}") from e


_BUILTIN_CATALOG = (
    PhysicalSystem(
        name="BH2+",
        two_j_down=0,
        two_j_up=4,
        gamma_down=-3.8e7,
        gamma_up=-3.8e7,
        coherence_time=None,
        note="rotational levels |0,0> and |2,2> of a trapped molecular ion; no coherence data",
    ),
    PhysicalSystem(
        name="Rb87",
        two_j_down=2,
        two_j_up=4,
        gamma_down=-4.4e10,
        gamma_up=4.4e10,
        coherence_time=21.0,
        note="hyperfine |F=1,mF=1> and |F=2,mF=2> (g=-0.5, +0.5); 21 s was measured on the mF=0 clock pair, "
        "coherence of these levels is not established",
    ),
    PhysicalSystem(
        name="NV",
        two_j_down=2,
        two_j_up=0,
        gamma_down=2.3 * MU_B / HBAR,
        gamma_up=0.0,
        coherence_time=3e-7,
        note="ground triplet |1,1> (g=2.3) and intermediate singlet |0,0> (g=0); 0.3 us is the singlet lifetime",
    ),
)


def builtin_catalog() -> list[PhysicalSystem]:
    return list(_BUILTIN_CATALOG)


def inline_system(gamma_down: float, gamma_up: float, J: float, n: int, name: str = "inline") -> PhysicalSystem:
    """
    Builds a system from J, n and the two gyromagnetic ratios instead of a catalog entry.
    """
    if float(n) != int(n):
        raise BadRangeError(f"n must be an integer, got {n}")
    try:
        two_j_down = AngularMomentumLabel.from_j(J).two_j
    except ValueError as e:
        raise BadRangeError(str(e)) from e
    two_j_up = two_j_down + 2 * int(n)
    if two_j_up < 0:
        raise BadRangeError(f"J + n must be non-negative, got J={J}, n={n}")
    return PhysicalSystem(name, two_j_down, two_j_up, gamma_down, gamma_up, None, "inline parameters")


def load_catalog(path: str | Path) -> list[PhysicalSystem]:
    try:
        document = json.loads(Path(path).read_text())
    except OSError as e:
        raise CatalogError(f"cannot read catalog {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise CatalogError(f"catalog {path} is not valid JSON: {e}") from e
    if not isinstance(document, list):
        raise CatalogError(f"catalog {path} must hold a JSON array")
    systems = [PhysicalSystem.from_dict(entry) for entry in document]
    log.debug("loaded %d systems from %s", len(systems), path)
    return systems


def dump_catalog(systems: list[PhysicalSystem]) -> str:
    return json.dumps([system.to_dict() for system in systems], indent=2)


def find_system(catalog: list[PhysicalSystem], name: str) -> PhysicalSystem:
    for system in catalog:
        if system.name.lower() == str(name).lower():
            return system
    known = ", ".join(system.name for system in catalog)
    raise UnknownSystemError(f"unknown system {name!r}, known systems: {known}")
