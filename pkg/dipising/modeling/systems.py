"""
Lists the physical systems of the builtin catalog, or of the catalog file given by `catalog`
(default: the DIPOLAR_CATALOG environment variable).
"""

import logging
import sys

import hydra
import pandas as pd
from omegaconf import DictConfig

from dipising.data.catalog import PhysicalSystem
from dipising.errors import DipolarError
from dipising.modeling.utils import load_systems, setup_environment
from dipising.output.writers import ResultWriter

log = logging.getLogger(__name__)

COLUMNS = ["name", "two_j_down", "two_j_up", "gamma_down", "gamma_up", "coherence_time_s", "note"]


def cmd_systems(catalog: list[PhysicalSystem], writer: ResultWriter) -> str:
    frame = pd.DataFrame([system.to_dict() for system in catalog], columns=COLUMNS)
    return writer.render(frame)


@hydra.main(config_path="../../configs", config_name="systems", version_base="1.3")
def main(cfg: DictConfig):
    setup_environment()
    try:
        writer: ResultWriter = hydra.utils.instantiate(cfg.format)
        sys.stdout.write(cmd_systems(load_systems(cfg.catalog), writer))
    except DipolarError as e:
        log.error("systems failed: %s", e)
        sys.exit(1)


if __name__ == "__main__":
    main()
