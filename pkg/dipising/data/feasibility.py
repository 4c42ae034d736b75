"""
Feasibility reports: controlled-Z gate time of a catalog system at a given distance, compared with
its reference coherence time.
"""

import logging
from dataclasses import dataclass
from functools import partial

import numpy as np
from tqdm.contrib.concurrent import thread_map

from dipising.data.catalog import PhysicalSystem
from dipising.errors import BadRangeError, ZeroCouplingError
from dipising.physics import gates
from dipising.physics.dipolar import CouplingGeometry

log = logging.getLogger(__name__)

FAVORABLE = "favorable"
UNFAVORABLE = "unfavorable"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class FeasibilityReport:
    system: str
    d: float
    t_cz: float
    coherence_ratio: float | None
    verdict: str

    def to_record(self) -> dict:
        return {
            "system": self.system,
            "d_m": self.d,
            "t_cz_s": self.t_cz,
            "coherence_ratio": self.coherence_ratio,
            "verdict": self.verdict,
        }


def _verdict(coherence_ratio: float | None) -> str:
    if coherence_ratio is None:
        return UNKNOWN
    return FAVORABLE if coherence_ratio > 1 else UNFAVORABLE


def gate_report(sys: PhysicalSystem, d: float) -> FeasibilityReport:
    geometry = CouplingGeometry(d)
    if sys.coupling_difference == 0:
        raise ZeroCouplingError(
            f"{sys.name}: gamma_up (J + n) equals gamma_down J, the controlled phase never accumulates"
        )
    qubit = sys.qubit_choice()
    result = gates.t_cz(qubit, qubit, geometry)
    coherence_ratio = None if sys.coherence_time is None else sys.coherence_time / result.t_cz
    return FeasibilityReport(
        system=sys.name,
        d=geometry.d,
        t_cz=result.t_cz,
        coherence_ratio=coherence_ratio,
        verdict=_verdict(coherence_ratio),
    )


def sweep_distance(
    sys: PhysicalSystem,
    d_min: float,
    d_max: float,
    points: int,
    max_workers: int = 1,
    progress: bool = False,
) -> list[FeasibilityReport]:
    """
    Reports at logarithmically spaced distances from d_min to d_max (both included), ascending in d.
    """
    if not (0 < d_min < d_max and np.isfinite(d_max)):
        raise BadRangeError(f"need 0 < d_min < d_max, got d_min={d_min}, d_max={d_max}")
    if int(points) != points or points < 2:
        raise BadRangeError(f"a sweep needs at least 2 points, got {points}")
    distances = np.geomspace(d_min, d_max, int(points))
    distances[0], distances[-1] = d_min, d_max
    log.debug("sweeping %s over %d distances", sys.name, len(distances))
    return thread_map(
        partial(gate_report, sys),
        [float(d) for d in distances],
        max_workers=max_workers,
        disable=not progress,
        desc=f"sweep {sys.name}",
    )
