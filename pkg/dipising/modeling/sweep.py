"""
Distance sweep of the controlled-Z gate time, written as CSV by default for external plotting.
"""

import logging
import sys

import hydra
import pandas as pd
from omegaconf import DictConfig

from dipising.data.catalog import PhysicalSystem
from dipising.data.feasibility import sweep_distance
from dipising.errors import DipolarError
from dipising.modeling.utils import require_positive, resolve_system, setup_environment
from dipising.output.writers import ResultWriter

log = logging.getLogger(__name__)

COLUMNS = ["d_m", "t_cz_s", "coherence_ratio"]


def cmd_sweep(
    system: PhysicalSystem,
    d_min: float,
    d_max: float,
    points: int,
    writer: ResultWriter,
    max_workers: int = 1,
    progress: bool = False,
) -> str:
    reports = sweep_distance(system, d_min, d_max, points, max_workers=max_workers, progress=progress)
    frame = pd.DataFrame([report.to_record() for report in reports], columns=COLUMNS)
    log.info(
        "%s: t_cz from %.3e s to %.3e s over %d distances",
        system.name,
        frame["t_cz_s"].iloc[0],
        frame["t_cz_s"].iloc[-1],
        len(frame),
    )
    return writer.render(frame)


@hydra.main(config_path="../../configs", config_name="sweep", version_base="1.3")
def main(cfg: DictConfig):
    setup_environment()
    try:
        d_min = require_positive("d_min", cfg.d_min)
        d_max = require_positive("d_max", cfg.d_max)
        system = resolve_system(cfg)
        writer: ResultWriter = hydra.utils.instantiate(cfg.format)
        sys.stdout.write(
            cmd_sweep(system, d_min, d_max, cfg.points, writer, max_workers=cfg.max_workers, progress=cfg.progress)
        )
    except DipolarError as e:
        log.error("sweep failed: %s", e)
        sys.exit(1)


if __name__ == "__main__":
    main()
